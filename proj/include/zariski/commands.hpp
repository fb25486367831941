#pragma once

// Command implementations behind the zariski executable. Each returns a
// ReportDocument or throws CommandError carrying the process exit code.

#include "zariski/report.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace zariski {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitComputation = 2, kExitPartialCensus = 3 };

class CommandError : public std::runtime_error {
 public:
  CommandError(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

ReportDocument cmd_components(const std::string& type, const std::vector<std::string>& invocation = {});
ReportDocument cmd_forms_det(std::int64_t determinant, const std::vector<std::string>& invocation = {});
ReportDocument cmd_forms_disc(std::int64_t discriminant, const std::vector<std::string>& invocation = {});

struct CmOptions {
  bool hilbert = false;
  unsigned precision_digits = 80;
  unsigned q_terms = 60;
};

ReportDocument cmd_cm(std::int64_t discriminant, const CmOptions& options,
                      const std::vector<std::string>& invocation = {});

struct CensusOptions {
  std::filesystem::path input;
  std::filesystem::path out;
  bool resume = false;
  unsigned workers = 1;
};

struct CensusResult {
  ReportDocument summary;
  int exit_code = kExitOk;
};

/// One JSON report per distinct canonical type, written atomically to
/// out/<type>.json. Per-line failures are recorded and the run continues.
CensusResult cmd_census(const CensusOptions& options, const std::vector<std::string>& invocation = {});

/// Non-empty, non-comment lines of a census input file (comments start at '#').
std::vector<std::string> read_census_lines(const std::filesystem::path& input);

}  // namespace zariski
