#pragma once

#include "cuntzli/ktheory.hpp"
#include "cuntzli/scalars.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace cuntzli {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Process exit codes; total and mutually exclusive per invocation.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitRejected = 2;
inline constexpr int kExitParseError = 3;
inline constexpr int kExitSizeGuard = 4;

struct RunConfig {
  std::string input;  // file path, or "-" for standard input
  enum class Format { Text, Json };
  Format format = Format::Text;
  bool with_cross_check = true;
  bool emit_matrices = false;
  long max_degree_size = 4096;  // cap on binomial(d, floor(d/2))
  int level_cap = 64;           // level cap for colimit membership queries
};

/// Parse a matrix from JSON {"matrix": [[...]]} (entries integers or decimal
/// strings) or from plain text ("d" on the first line, then d rows). Throws
/// ParseError for malformed, ragged, or non-square input.
IntMatrix parse_input(const std::string& source);

/// Read the file (or standard input for "-") and parse it.
IntMatrix load_input(const std::string& path_or_dash);

/// Full pipeline: certification, both K-group presentations, cross-check,
/// rendering. Returns the process exit code.
int run_compute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Certification only; prints a short report. Returns the process exit code.
int run_check(const std::string& path_or_dash, std::ostream& out, std::ostream& err);

/// Renderers, exposed for tests. a_form may be null (rejected input);
/// cross_passed is empty when the cross-check was not performed.
std::string render_text(const DilationReport& certification, const KTheoryReport* a_form,
                        std::optional<bool> cross_passed);
std::string render_json(const DilationReport& certification, const KTheoryReport* a_form,
                        std::optional<bool> cross_passed, bool emit_matrices);

}  // namespace cuntzli
