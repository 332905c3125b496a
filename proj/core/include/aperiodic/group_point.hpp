#pragma once

#include "aperiodic/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace aperiodic {

/// Integer coordinate tuple with respect to an ExponentBasis.
///
/// Group equality is equality of coordinate tuples; the embedding into R^d is
/// never consulted. Ordering is lexicographic on coordinates.
class GroupPoint {
public:
    GroupPoint() = default;
    explicit GroupPoint(std::size_t rank) : coords_(rank, Integer(0)) {}
    explicit GroupPoint(std::vector<Integer> coords) : coords_(std::move(coords)) {}
    GroupPoint(std::initializer_list<long> coords);

    static GroupPoint zero(std::size_t rank) { return GroupPoint(rank); }
    static GroupPoint unit(std::size_t rank, std::size_t axis);

    std::size_t rank() const noexcept { return coords_.size(); }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    Integer& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Integer>& coords() const noexcept { return coords_; }

    bool is_zero() const;

    GroupPoint& operator+=(const GroupPoint& other);
    GroupPoint& operator-=(const GroupPoint& other);
    GroupPoint& operator*=(const Integer& k);

    friend GroupPoint operator+(GroupPoint a, const GroupPoint& b) { return a += b; }
    friend GroupPoint operator-(GroupPoint a, const GroupPoint& b) { return a -= b; }
    friend GroupPoint operator*(const Integer& k, GroupPoint a) { return a *= k; }
    friend GroupPoint operator*(GroupPoint a, const Integer& k) { return a *= k; }
    GroupPoint operator-() const;

    friend bool operator==(const GroupPoint& a, const GroupPoint& b) { return a.coords_ == b.coords_; }
    friend std::strong_ordering operator<=>(const GroupPoint& a, const GroupPoint& b);

    /// gcd of the coordinates (0 for the zero point).
    Integer content() const;

    /// Divides by the content and flips sign so the first nonzero coordinate is positive.
    GroupPoint primitive() const;

    /// True (and sets k) when *this == k * direction for an integer k.
    bool is_multiple_of(const GroupPoint& direction, Integer& k) const;

    /// "(z1,...,zm)".
    std::string to_string() const;

private:
    std::vector<Integer> coords_;
};

struct GroupPointHash {
    std::size_t operator()(const GroupPoint& p) const noexcept;
};

/// True when a and b are linearly dependent over Q.
bool parallel(const GroupPoint& a, const GroupPoint& b);

}  // namespace aperiodic
