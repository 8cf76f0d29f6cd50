#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "logquant/error.hpp"
#include "logquant/indexcalc.hpp"
#include "logquant/serialize.hpp"

namespace logquant::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kOtherError = 1,
  kValidation = 2,
  kMalformed = 3,
  kInfiniteSupport = 4,
  kMismatch = 5,
};

int exit_code_for(ErrorKind kind);

/// One self-describing job: {"kind", "payload", "fixed_terms"?, "options"?}.
struct JobConfig {
  std::string kind;  // toric | s2_family | delzant | mincoupling
  Json payload;
  std::optional<std::vector<FixedPointTerm>> fixed_terms;
  std::optional<Integer> box_cap;
  std::optional<std::string> output_format;
};

JobConfig parse_job(const Json& j);

struct CommandResult {
  int exit_code = kOk;
  Json json;
  std::string table;
};

/// Command bodies; `limits` already reflects --box-cap / LOGQ_BOX_CAP.
CommandResult cmd_validate(const JobConfig& job, const PolyhedraLimits& limits);
CommandResult cmd_quantize(const JobConfig& job, const PolyhedraLimits& limits);
CommandResult cmd_qr_check(const JobConfig& job, const PolyhedraLimits& limits);
CommandResult cmd_mincoupling(const JobConfig& job, const PolyhedraLimits& limits);
CommandResult cmd_prequant(const JobConfig& job, const PolyhedraLimits& limits);

/// Full front end: argument parsing, config loading, dispatch and output.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace logquant::cli
