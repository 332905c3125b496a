#include "aperiodic/patterns.hpp"

#include "aperiodic/error.hpp"

#include <algorithm>

namespace aperiodic {

Shape::Shape(std::vector<GroupPoint> points) : points_(std::move(points)) {
    if (points_.empty()) throw ContractError("shape must be non-empty");
    for (const auto& p : points_) {
        if (p.rank() != points_.front().rank()) throw ContractError("shape points have different ranks");
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

Shape Shape::box(const std::vector<long>& widths) {
    std::vector<Integer> lo(widths.size(), Integer(0));
    std::vector<Integer> hi;
    for (long w : widths) {
        if (w <= 0) throw ContractError("shape widths must be positive");
        hi.emplace_back(w - 1);
    }
    return Shape(IntBox(std::move(lo), std::move(hi)).points());
}

Pattern pattern_at(const Configuration& c, const Shape& d, const GroupPoint& t) {
    Pattern out;
    out.reserve(d.size());
    for (const auto& p : d.points()) out.push_back(c.eval(p + t));
    return out;
}

PatternSet patterns(const Configuration& c, const Shape& d, const std::vector<GroupPoint>& probes) {
    if (d.rank() != c.rank()) throw ContractError("patterns: shape rank does not match configuration");
    PatternSet out;
    for (const auto& t : probes) out.patterns.insert(pattern_at(c, d, t));
    out.probes = probes.size();
    return out;
}

PatternSet patterns(const Configuration& c, const Shape& d) {
    const auto periods = c.periods();
    if (!periods) throw ContractError("patterns: configuration has no known period lattice; supply probes");
    PatternSet out = patterns(c, d, fundamental_domain(*periods));
    out.exact = true;
    return out;
}

}  // namespace aperiodic
