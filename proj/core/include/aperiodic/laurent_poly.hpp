#pragma once

#include "aperiodic/basis.hpp"
#include "aperiodic/group_point.hpp"
#include "aperiodic/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace aperiodic {

/// Finitely supported function from group points to exact rationals,
/// written f = sum f_u X^u. Zero coefficients are never stored.
class LaurentPoly {
public:
    using TermMap = std::map<GroupPoint, Rational>;

    /// The zero polynomial over `basis`.
    explicit LaurentPoly(ExponentBasis basis) : basis_(std::move(basis)) {}
    LaurentPoly(ExponentBasis basis, TermMap terms);

    static LaurentPoly constant(ExponentBasis basis, const Rational& c);
    static LaurentPoly monomial(ExponentBasis basis, GroupPoint exponent, const Rational& c = 1);

    const ExponentBasis& basis() const noexcept { return basis_; }
    std::size_t rank() const { return basis_.rank(); }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Coefficient at `u` (0 when u is not in the support).
    Rational coeff(const GroupPoint& u) const;
    std::vector<GroupPoint> support() const;

    /// All coefficients are integers.
    bool is_integral() const;
    /// Sum of |f_u|.
    Rational l1_norm() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& g);
    LaurentPoly& operator-=(const LaurentPoly& g);
    LaurentPoly& operator*=(const Rational& s);

    friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
    friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
    friend LaurentPoly operator*(LaurentPoly f, const Rational& s) { return f *= s; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly f) { return f *= s; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

    /// Multiplication by the monomial X^t.
    LaurentPoly shifted(const GroupPoint& t) const;

private:
    void add_term(const GroupPoint& u, const Rational& c);

    ExponentBasis basis_;
    TermMap terms_;
};

LaurentPoly poly_add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly poly_mul(const LaurentPoly& f, const LaurentPoly& g);

/// X^v - 1. Rejects v = 0.
LaurentPoly difference_poly(const ExponentBasis& basis, const GroupPoint& v);

/// f(X^k): every exponent u becomes k*u. Rejects k = 0.
LaurentPoly dilate(const LaurentPoly& f, const Integer& k);

/// Outcome of the line-polynomial test.
enum class LineStatus {
    not_line,        ///< fewer than two support points, or not collinear
    group_line,      ///< support lies on u + Z-multiples of a primitive group direction
    embedded_line,   ///< collinear in R^d, not in group coordinates, one independence class
    undecidable_declared_independent,  ///< collinear in R^d only across declared-independent classes
};

struct LineInfo {
    LineStatus status = LineStatus::not_line;
    /// Primitive, lexicographically positive group direction (group_line only).
    std::optional<GroupPoint> direction;
    /// Primitive integer direction of the embedded line (any collinear status).
    std::optional<std::vector<Integer>> embedded_direction;
};

/// Full line analysis of supp(f).
LineInfo line_info(const LaurentPoly& f);

/// Primitive group direction when supp(f) is a line in group coordinates.
/// Mixed-class collinearity in R^d counts as non-collinear here.
std::optional<GroupPoint> is_line_poly(const LaurentPoly& f);

/// True iff the maximum of embed(u).w over supp(f) is attained exactly once.
bool has_vertex_in_direction(const LaurentPoly& f, const RationalVector& w);

std::string to_string(LineStatus s);

}  // namespace aperiodic
