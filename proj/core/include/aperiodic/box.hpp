#pragma once

#include "aperiodic/group_point.hpp"
#include "aperiodic/rational.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace aperiodic {

/// Inclusive box of group points, lower[i] <= z_i <= upper[i].
struct IntBox {
    std::vector<Integer> lower;
    std::vector<Integer> upper;

    IntBox() = default;
    IntBox(std::vector<Integer> lo, std::vector<Integer> hi);

    /// "a..b,c..d" (one range per coordinate; a single integer means a..a).
    static IntBox parse(std::string_view text);
    /// The box [-radius, radius]^rank.
    static IntBox cube(std::size_t rank, long radius);

    std::size_t rank() const { return lower.size(); }
    bool empty() const;
    /// Number of points; throws if it exceeds 2^62.
    std::uint64_t count() const;
    bool contains(const GroupPoint& p) const;
    /// Box shrunk by `by[i]` on both sides of axis i (may become empty).
    IntBox shrunk(const std::vector<Integer>& by) const;
    std::vector<GroupPoint> points() const;
    /// Visits points in lexicographic order.
    void for_each(const std::function<void(const GroupPoint&)>& visit) const;
    std::string to_string() const;

    friend bool operator==(const IntBox&, const IntBox&) = default;
};

/// Axis-aligned box in embedded coordinates, closed on both ends.
struct RationalBox {
    RationalVector lower;
    RationalVector upper;

    /// "a..b,c..d" with rational endpoints.
    static RationalBox parse(std::string_view text);

    std::size_t dim() const { return lower.size(); }
    bool contains(const RationalVector& x) const;
    /// Distance from x to the complement, i.e. min over axes of the gaps to the faces
    /// (negative outside). Uses the max-norm of the faces so it is exact.
    Rational face_distance(const RationalVector& x) const;
    RationalBox shrunk(const Rational& by) const;
    std::string to_string() const;

    friend bool operator==(const RationalBox&, const RationalBox&) = default;
};

}  // namespace aperiodic
