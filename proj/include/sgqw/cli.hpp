#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace sgqw {

/// Process exit codes of the `sgqw` tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailure = 1,
  kExitUsage = 2,
  kExitDegenerate = 3,
};

/// Decimal (never scientific) text for a probability: the shortest string that
/// parses back to the same double, zero-padded to at least 10 significant digits.
std::string format_probability(double value);

/// Writes `t,probability` rows for t = 0..fp.size()-1.
void write_series_csv(const std::filesystem::path& path, std::span<const double> fp);

/// Parses a file written by write_series_csv. Throws Io on malformed input.
std::vector<double> read_series_csv(const std::filesystem::path& path);

/// A descriptor given inline (text starting with '{') or as a path to a JSON file.
nlohmann::json load_descriptor(const std::string& text);

/// Entry point behind the executable; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv);

}  // namespace sgqw
