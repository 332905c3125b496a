#pragma once

#include "aperiodic/configuration.hpp"

#include <set>
#include <vector>

namespace aperiodic {

/// Finite non-empty set of group points, kept sorted with duplicates merged.
class Shape {
public:
    explicit Shape(std::vector<GroupPoint> points);

    const std::vector<GroupPoint>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    std::size_t rank() const { return points_.front().rank(); }

    /// Rectangle {0..w0-1} x {0..w1-1} x ...
    static Shape box(const std::vector<long>& widths);

private:
    std::vector<GroupPoint> points_;
};

/// Values of a configuration on a shape, listed in the shape's point order.
using Pattern = std::vector<Rational>;

struct PatternSet {
    std::set<Pattern> patterns;
    /// True when the probes are known to meet every translation class
    /// (a full fundamental domain of a periodic configuration).
    bool exact = false;
    std::size_t probes = 0;

    std::size_t count() const { return patterns.size(); }
};

/// The pattern d -> c(d + t), the restriction of tau^{-t}(c) to D.
Pattern pattern_at(const Configuration& c, const Shape& d, const GroupPoint& t);

/// Distinct D-patterns read at the given translations. The count is a lower
/// bound for the pattern complexity. Throws DomainError if D + t leaves the domain.
PatternSet patterns(const Configuration& c, const Shape& d, const std::vector<GroupPoint>& probes);

/// Same, with probes defaulting to one fundamental domain of a periodic
/// configuration; the result is then exact. Throws if no period lattice is known.
PatternSet patterns(const Configuration& c, const Shape& d);

}  // namespace aperiodic
