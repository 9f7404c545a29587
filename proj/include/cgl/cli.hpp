#pragma once

#include <string>
#include <vector>

#include "cgl/io.hpp"

namespace cgl {

enum ExitStatus { exit_ok = 0, exit_failed = 1, exit_input = 2 };

struct RunResult {
    int status = exit_ok;
    Json report;  // {"kind", "job", "ok", "result"} or {"kind": "error", ...}
};

// Runs one job. Input problems (parse, domain, unsupported, resource)
// return exit_input with an error report; failed invariants exit_failed.
RunResult run_job(const JobSpec& job);

std::vector<std::string> command_names();

// The rows of report["result"]["rows"] as TSV, or key/value lines when the
// result has no table.
std::string report_tsv(const Json& report);

}  // namespace cgl
