#include "aperiodic/examples.hpp"

#include "aperiodic/error.hpp"

#include <cmath>
#include <set>

namespace aperiodic {

namespace {

RationalBox interval(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw ContractError("window lower end exceeds upper end");
    return RationalBox{{lo}, {hi}};
}

PointCloud non_empty(PointCloud s, const std::string& name) {
    if (s.size() == 0) throw ContractError(name + ": window " + s.window().to_string() + " contains no point");
    return s;
}

// Sign of p + q*sqrt(5).
int sign_sqrt5(const Rational& p, const Rational& q) {
    const int sp = sgn(p);
    const int sq = sgn(q);
    if (sp >= 0 && sq >= 0) return (sp > 0 || sq > 0) ? 1 : 0;
    if (sp <= 0 && sq <= 0) return -1;
    const int cmp = sgn(Rational(p * p - 5 * q * q));
    return sp > 0 ? cmp : -cmp;
}

ExponentBasis one_and(const Rational& alpha, const std::string& label) {
    return ExponentBasis::make({{Rational(1)}, {alpha}}, {0, 1}, {"1", label});
}

}  // namespace

PointCloud integer_cloud(const Integer& step, const Rational& lo, const Rational& hi) {
    if (step <= 0) throw ContractError("integer_cloud: step must be positive");
    std::vector<GroupPoint> pts;
    for (Integer k = ceil(lo / Rational(step)); Rational(k * step) <= hi; ++k) pts.push_back(GroupPoint({Integer(k * step)}));
    return PointCloud(ExponentBasis::standard(1), std::move(pts), interval(lo, hi));
}

PointCloud crystal_cloud(const ExponentBasis& basis, const std::vector<GroupPoint>& periods,
                         const std::vector<GroupPoint>& motif, const IntBox& cells, const RationalBox& window) {
    if (cells.rank() != periods.size()) throw ContractError("crystal_cloud: one cell range per period required");
    std::set<GroupPoint> pts;
    cells.for_each([&](const GroupPoint& z) {
        GroupPoint base(basis.rank());
        for (std::size_t i = 0; i < periods.size(); ++i) base += z[i] * periods[i];
        for (const auto& f : motif) {
            GroupPoint p = base + f;
            if (window.contains(basis.embed(p))) pts.insert(std::move(p));
        }
    });
    return PointCloud(basis, std::vector<GroupPoint>(pts.begin(), pts.end()), window);
}

PointCloud fibonacci_cloud(const Rational& lo, const Rational& hi) {
    const Rational phi = golden_ratio_surrogate();
    const ExponentBasis basis = one_and(phi, "phi");
    const double s5 = std::sqrt(5.0);
    const long b_lo = static_cast<long>(std::floor((to_double(lo) - s5 / 2) / s5)) - 2;
    const long b_hi = static_cast<long>(std::ceil((to_double(hi) + 0.5) / s5)) + 2;
    std::vector<GroupPoint> pts;
    for (long b = b_lo; b <= b_hi; ++b) {
        const Rational bq(b);
        const Integer a_lo = floor(lo - bq * phi) - 1;
        const Integer a_hi = ceil(hi - bq * phi) + 1;
        for (Integer a = a_lo; a <= a_hi; ++a) {
            const Rational aq(a);
            const Rational x = aq + bq * phi;
            if (x < lo || x > hi) continue;
            // -1/2 <= a + b(1 - sqrt5)/2 < sqrt5/2
            if (sign_sqrt5(aq + (bq + 1) / 2, -bq / 2) < 0) continue;
            if (sign_sqrt5(aq + bq / 2, -(bq + 1) / 2) >= 0) continue;
            pts.push_back(GroupPoint({a, Integer(b)}));
        }
    }
    return non_empty(PointCloud(basis, std::move(pts), interval(lo, hi)), "fibonacci");
}

PointCloud s1_cloud(const Rational& lo, const Rational& hi) {
    const Integer bound = std::max(abs(floor(lo)), abs(ceil(hi))) + 2;
    Integer l = 1;
    for (Integer n = 2; n <= bound; ++n) l = lcm(l, n);
    const ExponentBasis basis = ExponentBasis::make({{1 / Rational(l)}}, {0}, {"1/" + l.get_str()});
    std::vector<GroupPoint> pts;
    for (Integer n = -bound; n <= bound; ++n) {
        if (n == 0) continue;
        const Rational x = Rational(n) + 1 / Rational(n);
        if (x < lo || x > hi) continue;
        const Rational coord = x * Rational(l);
        pts.push_back(GroupPoint({coord.get_num()}));
    }
    return non_empty(PointCloud(basis, std::move(pts), interval(lo, hi)), "S1");
}

PointCloud s2_cloud(const Rational& lo, const Rational& hi) {
    const Rational pi = pi_surrogate();
    const ExponentBasis basis = one_and(pi, "pi");
    std::set<GroupPoint> pts;
    for (Integer n = floor(lo / pi); Rational(n) * pi <= hi; ++n) {
        if (Rational(n) * pi >= lo) pts.insert(GroupPoint({Integer(0), n}));
    }
    for (Integer k = ceil(lo); Rational(k) <= hi; ++k) {
        bool excluded = false;
        const Integer guess = floor(Rational(k) / pi);
        for (Integer n = guess - 1; n <= guess + 2 && !excluded; ++n) {
            const Rational x = Rational(n) * pi;
            excluded = floor(x) == k || ceil(x) == k;
        }
        if (!excluded) pts.insert(GroupPoint({k, Integer(0)}));
    }
    return non_empty(PointCloud(basis, std::vector<GroupPoint>(pts.begin(), pts.end()), interval(lo, hi)), "S2");
}

PointCloud s3_cloud(const Rational& lo, const Rational& hi) {
    const Rational pi = pi_surrogate();
    const ExponentBasis basis = one_and(pi, "pi");
    std::vector<GroupPoint> pts;
    for (Integer k = ceil(lo); k <= 0 && Rational(k) <= hi; ++k) pts.push_back(GroupPoint({k, Integer(0)}));
    for (Integer n = 1; Rational(n) * pi <= hi; ++n) {
        if (Rational(n) * pi >= lo) pts.push_back(GroupPoint({Integer(0), n}));
    }
    return non_empty(PointCloud(basis, std::move(pts), interval(lo, hi)), "S3");
}

ExponentBasis z_alpha_basis() { return one_and(sqrt_surrogate(2), "alpha"); }

Configuration two_lattice_config() {
    const ExponentBasis basis = z_alpha_basis();
    return sum_config({subgroup_indicator(basis, {0}), subgroup_indicator(basis, {1})});
}

PointCloud two_lattice_cloud(const Rational& lo, const Rational& hi) {
    const ExponentBasis basis = z_alpha_basis();
    const Rational alpha = basis.generator(1)[0];
    std::set<GroupPoint> pts;
    for (Integer k = ceil(lo); Rational(k) <= hi; ++k) pts.insert(GroupPoint({k, Integer(0)}));
    for (Integer n = ceil(lo / alpha); Rational(n) * alpha <= hi; ++n) pts.insert(GroupPoint({Integer(0), n}));
    return non_empty(PointCloud(basis, std::vector<GroupPoint>(pts.begin(), pts.end()), interval(lo, hi)), "two-lattice");
}

ExponentBasis punctured_grid_basis() {
    const Rational alpha = sqrt_surrogate(2);
    return ExponentBasis::make({{Rational(1), Rational(0)}, {alpha, Rational(0)}, {Rational(0), Rational(1)}},
                               {0, 1, 0}, {"e1", "alpha", "e2"});
}

Configuration punctured_grid_config() {
    const ExponentBasis basis = punctured_grid_basis();
    return sum_config({subgroup_indicator(basis, {0, 2}), subgroup_indicator(basis, {0}), subgroup_indicator(basis, {1})},
                      {1, -1, 1});
}

PointCloud punctured_grid_cloud(const RationalBox& window) {
    if (window.dim() != 2) throw ContractError("punctured-grid needs a 2-D window");
    const ExponentBasis basis = punctured_grid_basis();
    const Rational alpha = basis.generator(1)[0];
    std::vector<GroupPoint> pts;
    for (Integer j = ceil(window.lower[1]); Rational(j) <= window.upper[1]; ++j) {
        if (j == 0) {
            for (Integer n = ceil(window.lower[0] / alpha); Rational(n) * alpha <= window.upper[0]; ++n) {
                pts.push_back(GroupPoint({Integer(0), n, Integer(0)}));
            }
        } else {
            for (Integer a = ceil(window.lower[0]); Rational(a) <= window.upper[0]; ++a) {
                pts.push_back(GroupPoint({a, Integer(0), j}));
            }
        }
    }
    return non_empty(PointCloud(basis, std::move(pts), window), "punctured-grid");
}

std::vector<std::string> example_names() { return {"S1", "S2", "S3", "fibonacci", "two-lattice", "punctured-grid", "Z", "2Z"}; }

PointCloud example_cloud(const std::string& name, const RationalBox& window) {
    if (window.dim() == 0) throw ContractError("example_cloud: empty window");
    const Rational& lo = window.lower[0];
    const Rational& hi = window.upper[0];
    if (name == "S1") return s1_cloud(lo, hi);
    if (name == "S2") return s2_cloud(lo, hi);
    if (name == "S3") return s3_cloud(lo, hi);
    if (name == "fibonacci") return fibonacci_cloud(lo, hi);
    if (name == "two-lattice") return two_lattice_cloud(lo, hi);
    if (name == "punctured-grid") return punctured_grid_cloud(window);
    if (name == "Z") return non_empty(integer_cloud(1, lo, hi), name);
    if (name == "2Z") return non_empty(integer_cloud(2, lo, hi), name);
    throw ContractError("unknown example '" + name + "'");
}

LaurentPoly torus_annihilator() {
    const ExponentBasis b = ExponentBasis::standard(2);
    return difference_poly(b, GroupPoint{1, -1}) * difference_poly(b, GroupPoint{0, 1}) *
           difference_poly(b, GroupPoint{1, 0});
}

std::vector<Configuration> torus_closed_forms(const Rational& z1, const Rational& z2, const Rational& alpha) {
    const ExponentBasis b = ExponentBasis::standard(2);
    return {floor_config(b, z1 + z2, {alpha, alpha}), floor_config(b, z1, {alpha, 0}, -1),
            floor_config(b, z2, {0, alpha}, -1)};
}

}  // namespace aperiodic
