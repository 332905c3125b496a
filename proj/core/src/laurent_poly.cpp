#include "aperiodic/laurent_poly.hpp"

#include "aperiodic/error.hpp"

#include <set>

namespace aperiodic {

LaurentPoly::LaurentPoly(ExponentBasis basis, TermMap terms) : basis_(std::move(basis)) {
    for (auto& [u, c] : terms) add_term(u, c);
}

LaurentPoly LaurentPoly::constant(ExponentBasis basis, const Rational& c) {
    const std::size_t m = basis.rank();
    return monomial(std::move(basis), GroupPoint::zero(m), c);
}

LaurentPoly LaurentPoly::monomial(ExponentBasis basis, GroupPoint exponent, const Rational& c) {
    LaurentPoly f(std::move(basis));
    f.add_term(exponent, c);
    return f;
}

void LaurentPoly::add_term(const GroupPoint& u, const Rational& c) {
    if (u.rank() != basis_.rank()) {
        throw ContractError("exponent " + u.to_string() + " does not match basis rank " +
                            std::to_string(basis_.rank()));
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(u, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational LaurentPoly::coeff(const GroupPoint& u) const {
    const auto it = terms_.find(u);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<GroupPoint> LaurentPoly::support() const {
    std::vector<GroupPoint> out;
    out.reserve(terms_.size());
    for (const auto& [u, c] : terms_) out.push_back(u);
    return out;
}

bool LaurentPoly::is_integral() const {
    for (const auto& [u, c] : terms_) {
        if (!is_integer(c)) return false;
    }
    return true;
}

Rational LaurentPoly::l1_norm() const {
    Rational s = 0;
    for (const auto& [u, c] : terms_) s += abs(c);
    return s;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(*this);
    for (auto& [u, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
    require_same_basis(basis_, g.basis_, "poly_add");
    for (const auto& [u, c] : g.terms_) add_term(u, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) {
    require_same_basis(basis_, g.basis_, "poly_sub");
    for (const auto& [u, c] : g.terms_) add_term(u, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [u, c] : terms_) c *= s;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
    require_same_basis(f.basis_, g.basis_, "poly_mul");
    LaurentPoly out(f.basis_);
    for (const auto& [u, a] : f.terms_) {
        for (const auto& [v, b] : g.terms_) out.add_term(u + v, a * b);
    }
    return out;
}

LaurentPoly LaurentPoly::shifted(const GroupPoint& t) const {
    LaurentPoly out(basis_);
    for (const auto& [u, c] : terms_) out.terms_.emplace(u + t, c);
    return out;
}

LaurentPoly poly_add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }

LaurentPoly poly_mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }

LaurentPoly difference_poly(const ExponentBasis& basis, const GroupPoint& v) {
    if (v.is_zero()) throw ContractError("difference_poly: v = 0 gives the zero polynomial");
    LaurentPoly f = LaurentPoly::monomial(basis, v, 1);
    f -= LaurentPoly::constant(basis, 1);
    return f;
}

LaurentPoly dilate(const LaurentPoly& f, const Integer& k) {
    if (k == 0) throw ContractError("dilate: k must be nonzero");
    LaurentPoly::TermMap terms;
    for (const auto& [u, c] : f.terms()) terms.emplace(k * u, c);
    return LaurentPoly(f.basis(), std::move(terms));
}

namespace {

bool embedded_parallel(const RationalVector& a, const RationalVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a[i] * b[j] != a[j] * b[i]) return false;
        }
    }
    return true;
}

// Primitive integer direction with the first nonzero entry positive.
std::vector<Integer> canonical_embedded_direction(const RationalVector& v) {
    auto d = primitive_direction(v);
    for (const auto& x : d) {
        if (x != 0) {
            if (x < 0) {
                for (auto& y : d) y = -y;
            }
            break;
        }
    }
    return d;
}

}  // namespace

LineInfo line_info(const LaurentPoly& f) {
    LineInfo info;
    if (f.size() < 2) return info;
    const auto supp = f.support();
    const GroupPoint& origin = supp.front();
    std::vector<GroupPoint> diffs;
    diffs.reserve(supp.size() - 1);
    for (std::size_t i = 1; i < supp.size(); ++i) diffs.push_back(supp[i] - origin);

    const ExponentBasis& basis = f.basis();

    bool group_collinear = true;
    for (const auto& d : diffs) {
        if (!parallel(d, diffs.front())) {
            group_collinear = false;
            break;
        }
    }
    if (group_collinear) {
        info.status = LineStatus::group_line;
        info.direction = diffs.front().primitive();
        const RationalVector e = basis.embed(*info.direction);
        if (!is_zero(e)) info.embedded_direction = canonical_embedded_direction(e);
        return info;
    }

    // Collinearity in R^d, decided on the (possibly surrogate) embedding.
    RationalVector reference;
    std::set<int> classes;
    for (const auto& d : diffs) {
        const RationalVector e = basis.embed(d);
        for (int c : basis.classes_used(d)) classes.insert(c);
        if (is_zero(e)) continue;
        if (reference.empty()) {
            reference = e;
        } else if (!embedded_parallel(reference, e)) {
            return info;
        }
    }
    if (reference.empty()) return info;
    info.embedded_direction = canonical_embedded_direction(reference);
    info.status = classes.size() > 1 ? LineStatus::undecidable_declared_independent : LineStatus::embedded_line;
    return info;
}

std::optional<GroupPoint> is_line_poly(const LaurentPoly& f) {
    LineInfo info = line_info(f);
    if (info.status != LineStatus::group_line) return std::nullopt;
    return info.direction;
}

bool has_vertex_in_direction(const LaurentPoly& f, const RationalVector& w) {
    if (f.is_zero()) throw ContractError("has_vertex_in_direction: zero polynomial has no support");
    if (w.size() != f.basis().dim()) throw ContractError("has_vertex_in_direction: direction dimension mismatch");
    if (is_zero(w)) throw ContractError("has_vertex_in_direction: direction must be nonzero");
    bool have_best = false;
    Rational best;
    std::size_t ties = 0;
    for (const auto& [u, c] : f.terms()) {
        const Rational score = dot(f.basis().embed(u), w);
        if (!have_best || score > best) {
            best = score;
            have_best = true;
            ties = 1;
        } else if (score == best) {
            ++ties;
        }
    }
    return ties == 1;
}

std::string to_string(LineStatus s) {
    switch (s) {
        case LineStatus::not_line: return "not-line";
        case LineStatus::group_line: return "line";
        case LineStatus::embedded_line: return "embedded-line";
        case LineStatus::undecidable_declared_independent: return "undecidable-declared-independent";
    }
    return "unknown";
}

}  // namespace aperiodic
