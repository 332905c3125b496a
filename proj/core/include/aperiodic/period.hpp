#pragma once

#include "aperiodic/box.hpp"
#include "aperiodic/configuration.hpp"
#include "aperiodic/laurent_poly.hpp"
#include "aperiodic/point_cloud.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aperiodic {

struct PeriodOptions {
    /// A period p is only accepted when the window spans at least this many
    /// copies of |p|. Four exceeds the largest repetition exponent of the
    /// Fibonacci word (2 + phi), so that chain can never pass.
    unsigned min_period_repeats = 4;
    /// Caps the number of candidate periods tried (1-D) or the multiple of the
    /// direction tried per fiber (group lines); 0 leaves only the repeat condition.
    long search_bound = 0;
};

/// Size of the theoretical search space: a period lies in (S - S) within B_{2 M R}
/// with M <= |A|^(D^e), D = |(S - S) within B_{2R}|, e = floor(k / 2r).
struct RepeatBound {
    std::size_t alphabet_size = 0;
    std::size_t local_differences = 0;
    Integer exponent;
    /// log10 of the bound on M (may be huge; kept as a double).
    double log10_m = 0;
};

struct Period1D {
    std::optional<GroupPoint> period;
    Rational length;
    std::size_t anchors = 0;
    std::size_t candidates_tested = 0;
    RepeatBound bound;
    std::string diagnostic;
};

/// Scans anchored windows [s_i - k, s_i] of a colored 1-D point set for exact
/// repeats (group coordinates and colors). Candidate periods s_j - s_i are tried
/// shortest first and returned only after the translation test on the whole window.
Period1D detect_period_1d(const PointCloud& s, const Rational& k, const PeriodOptions& options = {});

/// True when every point x with x + p (or x - p) in the window maps onto a point
/// of the same color.
bool translation_test(const PointCloud& s, const GroupPoint& p);

enum class LinePeriodStatus { found, rejected, inconclusive };
std::string to_string(LinePeriodStatus s);

struct FiberPeriod {
    /// Transverse key: a group point for group lines, the embedded offset otherwise.
    std::string fiber;
    std::size_t points = 0;
    std::optional<GroupPoint> period;
};

struct LinePeriod {
    LinePeriodStatus status = LinePeriodStatus::inconclusive;
    LineStatus line = LineStatus::not_line;
    std::optional<GroupPoint> period;
    std::vector<FiberPeriod> fibers;
    std::string diagnostic;
};

/// Period of c along the line of f. Group lines: each coset u + Z w meeting the
/// probe box gets its smallest period, combined by lcm and verified on the box.
/// Embedded lines: support points in the box are split into fibers by their
/// embedded offset transverse to the line, each fiber runs detect_period_1d with
/// k = length of supp f, and fiber periods that are not parallel in group
/// coordinates reject a common period (they lie in declared-independent classes).
LinePeriod line_annihilator_period(const Configuration& c, const LaurentPoly& f, const IntBox& probes,
                                   const PeriodOptions& options = {});

}  // namespace aperiodic
