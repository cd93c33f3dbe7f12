#pragma once

#include <cmath>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qquery/boolfn.hpp"
#include "qquery/io.hpp"

namespace qquery {

enum class OutputFormat { Markdown, Json, Csv };

struct GlobalOptions {
  std::optional<OutputFormat> format;
  unsigned workers = 0;
  std::uint64_t seed = 0;
  bool timestamp = true;
  std::string out_path;
};

enum class FunctionSource { Exhaustive, Families, Sampled };

/// Inputs of the enumeration suite.
struct SuiteConfig {
  int n = 3;
  FunctionSource source = FunctionSource::Exhaustive;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  bool include_adeg = false;
  unsigned workers = 1;

  /// Throws ParameterError for combinations the suite cannot run.
  void validate() const;
};

struct EnumerationResult {
  std::vector<std::string> rows;
  std::size_t functions = 0;
  /// Violation count per inequality name (every name that was checked).
  std::vector<std::pair<std::string, std::size_t>> violations;
  std::size_t total_violations() const;
};

EnumerationResult run_enumeration(const SuiteConfig& config);

enum class Setting { Exact, ZeroError, Bounded };
std::string setting_name(Setting s);

/// One cell of the quantum-complexity table: a computed lower bound and, when
/// available, an upper bound witnessed by a circuit or driver whose semantics
/// were verified exhaustively.
struct Table1Row {
  std::string function;
  Setting setting = Setting::Exact;
  int n = 0;
  double lower = 0;
  std::string lower_basis;
  std::optional<int> upper;
  std::string upper_basis;
  bool verified = false;
  /// Constant-free value reported alongside, never checked.
  std::optional<double> reported_bound;

  bool consistent() const { return !upper || lower <= *upper + 1e-12; }
  bool tight() const { return upper && std::abs(lower - *upper) < 1e-12; }
};

std::vector<Table1Row> table1_rows(int n);

/// Entry point of the qquery tool. Returns the process exit code: 0 iff every
/// requested check passed, 1 if a check failed, 2 on usage or input errors.
/// A one-line JSON summary always goes to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qquery
