#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace critconf::cli {

using Json = nlohmann::json;

enum class NumberMode { Exact, Float };

/// Defaults taken from the command line; a job's "options" object overrides them.
struct Defaults {
  NumberMode mode = NumberMode::Exact;
  double tolerance = 1e-9;
  std::size_t samples = 5;
  std::uint64_t seed = 1;
  /// Command for jobs that omit one; a job naming a different command is rejected.
  std::string command;
};

struct JobResult {
  Json report;
  int exit_code = 0;  // 0 ok, 1 invalid input, 2 undefined case
};

JobResult run_job(const Json& job, const Defaults& defaults);

/// Runs independent jobs concurrently; results keep the input order.
std::vector<JobResult> run_batch(const Json& jobs, const Defaults& defaults);

/// Parses the text of a job document; a parse failure becomes an invalid-input report.
JobResult run_text(const std::string& text, bool batch, const Defaults& defaults);

}  // namespace critconf::cli
