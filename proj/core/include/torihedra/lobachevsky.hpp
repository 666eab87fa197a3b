#pragma once

namespace torihedra {

/// Lobachevsky function: minus the integral of log|2 sin t| from 0 to theta.
double lobachevsky(double theta);

/// Clausen function Cl_2(x) = 2 * lobachevsky(x / 2).
double clausen2(double x);

}  // namespace torihedra
