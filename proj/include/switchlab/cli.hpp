#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "switchlab/errors.hpp"
#include "switchlab/params.hpp"
#include "switchlab/realization.hpp"
#include "switchlab/transition.hpp"

namespace switchlab::cli {

inline constexpr const char* kSchema = "switchlab/1";

struct CliConfig {
  std::string subcommand;
  /// Graph files, in command order.
  std::vector<std::string> inputs;
  std::string degree_expression;
  Filter filter = Filter::all;
  std::vector<ParamId> params;
  std::vector<int> switch_vertices;
  std::string construction;
  int construction_parameter = 0;
  std::string format = "json";
  std::string dot_path;
  std::string witness_dot_path;
  std::size_t enumeration_budget = kDefaultRealizationBudget;
  std::size_t bridge_budget = kDefaultBridgeBudget;
  bool with_diameter = false;
  bool with_values = false;
  bool count_only = false;
  std::optional<bool> verify;
};

/// 0 success; 1 input, domain or verification error; 2 a proven statement
/// contradicted (the output carries a witness); 3 I/O; 4 budget exhausted.
int exit_code(ErrorKind kind) noexcept;

/// Runs one subcommand, writing the report to `out`. Errors are reported as
/// a single JSON line on `out` and mapped through exit_code.
int run(const CliConfig& config, std::ostream& out);

/// Parses `args` (without the program name) and runs them.
int main(const std::vector<std::string>& args, std::ostream& out);

}  // namespace switchlab::cli
