#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace aperiodic::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// Runs the acceptance criteria in order; `ids` empty means all of them.
/// `progress` (optional) is called after each criterion.
std::vector<CriterionResult> run(const std::vector<int>& ids = {},
                                 const std::function<void(const CriterionResult&)>& progress = {});

/// "[PASS] 3 periodizer: ..." style line.
std::string format(const CriterionResult& r);

constexpr int criterion_count = 11;

}  // namespace aperiodic::acceptance
