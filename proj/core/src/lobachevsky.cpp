#include "torihedra/lobachevsky.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace torihedra {

namespace {

constexpr int kTerms = 30;

// Coefficients 2 zeta(2k) / ((2 pi)^(2k) 2k (2k+1)) of the Bernoulli expansion
// Cl_2(x) = x - x log x + sum_k c_k x^(2k+1), valid for 0 < x < 2 pi.
std::array<double, kTerms> make_coefficients() {
  std::array<double, kTerms> c{};
  const double two_pi = 2 * std::numbers::pi;
  for (int k = 1; k <= kTerms; ++k) {
    const int s = 2 * k;
    double zeta = 0;
    switch (k) {
      case 1: zeta = std::pow(std::numbers::pi, 2) / 6; break;
      case 2: zeta = std::pow(std::numbers::pi, 4) / 90; break;
      case 3: zeta = std::pow(std::numbers::pi, 6) / 945; break;
      case 4: zeta = std::pow(std::numbers::pi, 8) / 9450; break;
      default:
        for (int n = 60; n >= 1; --n) zeta += std::pow(static_cast<double>(n), -s);
    }
    c[k - 1] = 2 * zeta / (std::pow(two_pi, s) * s * (s + 1));
  }
  return c;
}

const std::array<double, kTerms>& coefficients() {
  static const std::array<double, kTerms> c = make_coefficients();
  return c;
}

// Cl_2 on [0, pi].
double clausen_reduced(double x) {
  if (x == 0) return 0;
  const auto& c = coefficients();
  const double x2 = x * x;
  double sum = 0;
  for (int k = kTerms - 1; k >= 0; --k) sum = sum * x2 + c[k];
  return x - x * std::log(x) + sum * x * x2;
}

}  // namespace

double clausen2(double x) {
  const double two_pi = 2 * std::numbers::pi;
  x = std::remainder(x, two_pi);  // (-pi, pi]
  if (x < 0) return -clausen_reduced(-x);
  return clausen_reduced(x);
}

double lobachevsky(double theta) { return 0.5 * clausen2(2 * theta); }

}  // namespace torihedra
