#include "aperiodic/forced.hpp"

#include "aperiodic/error.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace aperiodic {

std::string to_string(CoverageMethod m) { return m == CoverageMethod::exact ? "exact" : "sampled"; }

std::string to_string(CoverageConclusion c) {
    return c == CoverageConclusion::premise_met ? "forced-strongly-periodic-premise-met" : "gap-directions-listed";
}

namespace {

using IntPoint = std::pair<Integer, Integer>;

Integer cross(const IntPoint& o, const IntPoint& a, const IntPoint& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

IntDirection primitive_normal(const Integer& x, const Integer& y) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return {x / g, y / g};
}

IntDirection integer_direction(const RationalVector& v) {
    if (is_zero(v)) throw ContractError("direction must be nonzero");
    return primitive_direction(v);
}

}  // namespace

NewtonPolygon newton_polygon(const LaurentPoly& f) {
    if (f.is_zero()) throw ContractError("newton_polygon: zero polynomial");
    if (f.basis().dim() != 2) throw ContractError("newton_polygon: basis dimension must be 2");
    std::vector<RationalVector> emb;
    Integer den = 1;
    for (const auto& u : f.support()) {
        emb.push_back(f.basis().embed(u));
        for (const auto& x : emb.back()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<IntPoint> pts;
    for (const auto& e : emb) {
        const Rational a = e[0] * den;
        const Rational b = e[1] * den;
        pts.emplace_back(a.get_num(), b.get_num());
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<IntPoint> hull;
    if (pts.size() <= 2) {
        hull = pts;
    } else {
        // Andrew's monotone chain; strict turns drop collinear points.
        std::vector<IntPoint> h(2 * pts.size());
        std::size_t k = 0;
        for (const auto& p : pts) {
            while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
            h[k++] = p;
        }
        for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
            while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
            h[k++] = pts[i];
        }
        h.resize(k - 1);
        hull = h;
    }

    NewtonPolygon out;
    for (const auto& p : hull) out.vertices.push_back({Rational(p.first) / den, Rational(p.second) / den});
    if (hull.size() == 2) {
        const Integer dx = hull[1].first - hull[0].first;
        const Integer dy = hull[1].second - hull[0].second;
        out.normals.push_back(primitive_normal(dy, -dx));
        out.normals.push_back(primitive_normal(-dy, dx));
    } else if (hull.size() > 2) {
        for (std::size_t i = 0; i < hull.size(); ++i) {
            const IntPoint& a = hull[i];
            const IntPoint& b = hull[(i + 1) % hull.size()];
            // Counter-clockwise order: the outward normal is the edge turned clockwise.
            out.normals.push_back(primitive_normal(b.second - a.second, a.first - b.first));
        }
    }
    std::sort(out.normals.begin(), out.normals.end());
    return out;
}

CoverageReport vertex_coverage(const std::vector<LaurentPoly>& family, const CoverageOptions& options) {
    if (family.empty()) throw ContractError("vertex_coverage: empty family");
    for (const auto& f : family) {
        if (f.is_zero()) throw ContractError("vertex_coverage: zero polynomial in family");
        require_same_basis(f.basis(), family.front().basis(), "vertex_coverage");
    }
    CoverageReport r;
    r.dim = family.front().basis().dim();
    if (r.dim == 1) {
        // A nonzero polynomial on a line has a unique extreme point both ways.
        r.directions_tested = 2;
    } else if (r.dim == 2) {
        std::set<IntDirection> common;
        for (std::size_t i = 0; i < family.size(); ++i) {
            r.polygons.push_back(newton_polygon(family[i]));
            const std::set<IntDirection> n(r.polygons.back().normals.begin(), r.polygons.back().normals.end());
            if (i == 0) {
                common = n;
            } else {
                std::set<IntDirection> keep;
                std::set_intersection(common.begin(), common.end(), n.begin(), n.end(), std::inserter(keep, keep.end()));
                common = std::move(keep);
            }
        }
        r.uncovered.assign(common.begin(), common.end());
        for (const auto& p : r.polygons) r.directions_tested += p.normals.size();
    } else {
        r.method = CoverageMethod::sampled;
        std::vector<RationalVector> dirs = options.critical;
        for (std::size_t i = 0; i < r.dim; ++i) {
            for (int s : {1, -1}) {
                RationalVector e(r.dim, Rational(0));
                e[i] = s;
                dirs.push_back(e);
            }
        }
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<long> coord(-16, 16);
        while (dirs.size() < options.critical.size() + 2 * r.dim + options.samples) {
            RationalVector w(r.dim);
            for (auto& x : w) x = coord(rng);
            if (!is_zero(w)) dirs.push_back(std::move(w));
        }
        std::set<IntDirection> failed;
        for (const auto& w : dirs) {
            if (w.size() != r.dim) throw ContractError("vertex_coverage: critical direction has the wrong dimension");
            const bool covered = std::any_of(family.begin(), family.end(),
                                             [&](const LaurentPoly& f) { return has_vertex_in_direction(f, w); });
            ++r.directions_tested;
            if (!covered) failed.insert(integer_direction(w));
        }
        r.uncovered.assign(failed.begin(), failed.end());
    }
    r.conclusion = r.uncovered.empty() ? CoverageConclusion::premise_met : CoverageConclusion::gaps_listed;
    return r;
}

std::vector<HyperplaneVerdict> hyperplane_condition(const LaurentPoly& f, const std::vector<RationalVector>& directions) {
    if (f.is_zero()) throw ContractError("hyperplane_condition: zero polynomial");
    const GroupPoint origin = GroupPoint::zero(f.rank());
    if (f.coeff(origin) == 0) throw ContractError("hyperplane_condition: 0 is not in the support; shift f first");
    std::vector<HyperplaneVerdict> out;
    for (const auto& v : directions) {
        if (v.size() != f.basis().dim()) throw ContractError("hyperplane_condition: direction dimension mismatch");
        if (is_zero(v)) throw ContractError("hyperplane_condition: direction must be nonzero");
        HyperplaneVerdict h{v, true, std::nullopt};
        for (const auto& u : f.support()) {
            if (u.is_zero()) continue;
            if (dot(f.basis().embed(u), v) == 0) {
                h.holds = false;
                h.witness = u;
                break;
            }
        }
        out.push_back(std::move(h));
    }
    return out;
}

LaurentPoly normalized_at(const LaurentPoly& f, const GroupPoint& u) {
    if (f.coeff(u) == 0) throw ContractError("normalized_at: " + u.to_string() + " is not in the support");
    return f.shifted(-u);
}

}  // namespace aperiodic
