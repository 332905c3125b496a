#include "aperiodic/group_point.hpp"

#include "aperiodic/error.hpp"

namespace aperiodic {

namespace {

void require_same_rank(const GroupPoint& a, const GroupPoint& b) {
    if (a.rank() != b.rank()) {
        throw ContractError("group point rank mismatch: " + a.to_string() + " vs " + b.to_string());
    }
}

}  // namespace

GroupPoint::GroupPoint(std::initializer_list<long> coords) {
    coords_.reserve(coords.size());
    for (long c : coords) coords_.emplace_back(c);
}

GroupPoint GroupPoint::unit(std::size_t rank, std::size_t axis) {
    GroupPoint p(rank);
    p.coords_.at(axis) = 1;
    return p;
}

bool GroupPoint::is_zero() const {
    for (const auto& c : coords_) {
        if (c != 0) return false;
    }
    return true;
}

GroupPoint& GroupPoint::operator+=(const GroupPoint& other) {
    require_same_rank(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

GroupPoint& GroupPoint::operator-=(const GroupPoint& other) {
    require_same_rank(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

GroupPoint& GroupPoint::operator*=(const Integer& k) {
    for (auto& c : coords_) c *= k;
    return *this;
}

GroupPoint GroupPoint::operator-() const {
    GroupPoint out(*this);
    for (auto& c : out.coords_) c = -c;
    return out;
}

std::strong_ordering operator<=>(const GroupPoint& a, const GroupPoint& b) {
    if (a.rank() != b.rank()) return a.rank() <=> b.rank();
    for (std::size_t i = 0; i < a.rank(); ++i) {
        const int c = cmp(a.coords_[i], b.coords_[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Integer GroupPoint::content() const {
    Integer g = 0;
    for (const auto& c : coords_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

GroupPoint GroupPoint::primitive() const {
    const Integer g = content();
    if (g == 0) throw ContractError("zero group point has no primitive direction");
    GroupPoint out(*this);
    for (auto& c : out.coords_) c /= g;
    for (const auto& c : out.coords_) {
        if (c != 0) {
            if (c < 0) {
                for (auto& x : out.coords_) x = -x;
            }
            break;
        }
    }
    return out;
}

bool GroupPoint::is_multiple_of(const GroupPoint& direction, Integer& k) const {
    require_same_rank(*this, direction);
    std::size_t pivot = direction.rank();
    for (std::size_t i = 0; i < direction.rank(); ++i) {
        if (direction[i] != 0) {
            pivot = i;
            break;
        }
    }
    if (pivot == direction.rank()) return false;
    if (!mpz_divisible_p(coords_[pivot].get_mpz_t(), direction[pivot].get_mpz_t())) return false;
    const Integer factor = coords_[pivot] / direction[pivot];
    for (std::size_t i = 0; i < rank(); ++i) {
        if (coords_[i] != factor * direction[i]) return false;
    }
    k = factor;
    return true;
}

std::string GroupPoint::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ",";
        s += coords_[i].get_str();
    }
    return s + ")";
}

std::size_t GroupPointHash::operator()(const GroupPoint& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ p.rank();
    for (const auto& c : p.coords()) {
        const std::size_t limb = mpz_size(c.get_mpz_t()) ? mpz_getlimbn(c.get_mpz_t(), 0) : 0;
        const std::size_t v = limb * 2 + (mpz_sgn(c.get_mpz_t()) < 0 ? 1 : 0);
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

bool parallel(const GroupPoint& a, const GroupPoint& b) {
    require_same_rank(a, b);
    // All 2x2 minors vanish.
    for (std::size_t i = 0; i < a.rank(); ++i) {
        for (std::size_t j = i + 1; j < a.rank(); ++j) {
            if (a[i] * b[j] != a[j] * b[i]) return false;
        }
    }
    return true;
}

}  // namespace aperiodic
