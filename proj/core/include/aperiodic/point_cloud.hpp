#pragma once

#include "aperiodic/basis.hpp"
#include "aperiodic/box.hpp"
#include "aperiodic/configuration.hpp"
#include "aperiodic/group_point.hpp"

#include <map>
#include <optional>
#include <vector>

namespace aperiodic {

/// Finite colored point set with the window it was observed in.
///
/// Points are kept sorted by embedding (lexicographically), so in dimension one
/// they are in increasing order along the line.
class PointCloud {
public:
    /// `colors` empty means every color is 1. Rejects duplicates, zero colors
    /// and points whose embedding leaves the window.
    PointCloud(ExponentBasis basis, std::vector<GroupPoint> points, RationalBox window,
               std::vector<Rational> colors = {});

    const ExponentBasis& basis() const noexcept { return basis_; }
    std::size_t dim() const { return basis_.dim(); }
    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<GroupPoint>& points() const noexcept { return points_; }
    const std::vector<Rational>& colors() const noexcept { return colors_; }
    const std::vector<RationalVector>& embedded() const noexcept { return embedded_; }
    const RationalBox& window() const noexcept { return window_; }

    bool contains(const GroupPoint& p) const { return index_.count(p) != 0; }
    std::optional<std::size_t> index_of(const GroupPoint& p) const;
    /// All colors equal to 1.
    bool uncolored() const;

    /// The colored indicator as an explicit-window configuration.
    Configuration as_configuration() const;

    /// S + F restricted to the same window; colors are dropped.
    PointCloud minkowski_sum(const std::vector<GroupPoint>& f) const;
    /// Points whose embedding lies in `box`, with the window replaced by `box`.
    PointCloud restricted(const RationalBox& box) const;

private:
    ExponentBasis basis_;
    std::vector<GroupPoint> points_;
    std::vector<Rational> colors_;
    std::vector<RationalVector> embedded_;
    RationalBox window_;
    std::map<GroupPoint, std::size_t> index_;
};

}  // namespace aperiodic
