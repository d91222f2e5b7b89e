#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fhpt/model.hpp"

namespace fhpt::cli {

inline constexpr const char* kToolVersion = "0.1.0";
/// Embedded as "version" in every JSON document the tool writes.
inline constexpr const char* kSchemaVersion = "fhpt-report/1";

enum class ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

enum class OutputFormat { kCsv, kJson };

struct RunConfig {
  std::string subcommand;
  model::PotentialParams params;
  int nmax = 10;
  int n = 0;
  std::complex<double> z{1.5, 0.0};
  model::IntervalMode interval = model::IntervalMode::kFull;
  int quad_order = 200;
  std::optional<double> tol;
  int points = 201;
  OutputFormat format = OutputFormat::kCsv;
  std::string out_path;
};

/// Accepts "a+bi", "a-bi", "a", "bi", "i" and polar "r@theta" (radians).
/// Throws std::invalid_argument on anything else.
std::complex<double> parse_complex(const std::string& text);

/// Inverse of parse_complex in "a+bi" form.
std::string format_complex(std::complex<double> z);

/// Shortest decimal string that reads back to the same double.
std::string format_double(double v);

/// Runs one invocation. Data goes to `out` (or the --out file), diagnostics
/// to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fhpt::cli
