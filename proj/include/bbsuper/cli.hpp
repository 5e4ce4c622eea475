#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace bbsuper::cli {

enum class Subcommand { Validate, Roots, Char, DenomCheck, Oracle, Compare };
enum class Format { Json, Table };

struct JobSpec {
  Subcommand subcommand = Subcommand::Validate;
  std::string datum_path;
  std::optional<std::string> lambda_path;
  int height = 0;
  Format format = Format::Json;
  bool symbolic = false;
  unsigned jobs = 1;
};

enum ExitCode : int { kOk = 0, kValidationError = 1, kMismatch = 2, kResourceCap = 3 };

std::optional<Subcommand> parse_subcommand(const std::string& name);

/// Runs one job; the report goes to `out`, diagnostics to `err`.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace bbsuper::cli
