#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "torihedra/diagram.hpp"

namespace torihedra::cli {

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  int window = 3;
  double tol_newton = 1e-12;
  double tol_gluing = 1e-9;
  double tol_equality = 1e-8;
  std::string format = "text";
  std::string svg;
  std::string output;
  bool bounds = false;
};

enum ExitCode { kOk = 0, kDomainFailure = 1, kUsage = 2 };

/// Resolves "catalog:NAME", "-" (stdin), a file path, or a bare catalog name.
TorusDiagram load_input(const std::string& spec, std::istream& in);

/// Runs the command line; output goes to out unless --output names a file.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

int cmd_validate(const RunConfig& config, std::istream& in, std::ostream& out);
int cmd_volume(const RunConfig& config, std::istream& in, std::ostream& out);
int cmd_pattern(const RunConfig& config, std::istream& in, std::ostream& out);
int cmd_compare(const RunConfig& config, std::istream& in, std::ostream& out);
int cmd_triangulate(const RunConfig& config, std::istream& in, std::ostream& out);
int cmd_catalog(const RunConfig& config, std::ostream& out);
int cmd_export(const RunConfig& config, std::istream& in, std::ostream& out);

}  // namespace torihedra::cli
