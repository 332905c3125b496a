#pragma once

#include "run_config.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace aperiodic::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_negative = 2;

struct Outcome {
    nlohmann::json result = nlohmann::json::object();
    /// Human-readable lines for stdout.
    std::vector<std::string> summary;
    /// "ok" or a negative verdict label.
    std::string verdict = "ok";
    int exit_code = exit_ok;
    /// Flag holding the report path ("report" or "out"); empty when the command
    /// writes its own artifact and has no JSON report.
    std::string report_flag = "report";
};

/// Runs the command named in `rc` and writes its report.
int execute(const RunConfig& rc);

/// Report envelope: tool, version, run config, verdict, result, timestamp.
nlohmann::json envelope(const RunConfig& rc, const Outcome& o);

}  // namespace aperiodic::cli
