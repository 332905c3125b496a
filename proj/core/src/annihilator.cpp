#include "aperiodic/annihilator.hpp"

#include "aperiodic/error.hpp"
#include "aperiodic/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace aperiodic {

namespace {

void record(AnnihilationCertificate& cert, const LaurentPoly& f, const Configuration& c, const GroupPoint& u) {
    Rational s = 0;
    for (const auto& [v, a] : f.terms()) s += a * c.eval(u - v);
    ++cert.probes;
    if (s == 0) return;
    const Rational m = abs(s);
    if (m > cert.max_residual) cert.max_residual = m;
    if (!cert.witness) {
        cert.witness = u;
        cert.witness_residual = s;
    }
}

AnnihilationCertificate start(const LaurentPoly& f, const Configuration& c) {
    require_same_basis(f.basis(), c.basis(), "verify_annihilator");
    AnnihilationCertificate cert{f, c.kind(), 0, 0, false, std::nullopt, 0};
    return cert;
}

}  // namespace

AnnihilationCertificate verify_annihilator(const LaurentPoly& f, const Configuration& c,
                                           const std::vector<GroupPoint>& probes) {
    AnnihilationCertificate cert = start(f, c);
    for (const auto& u : probes) record(cert, f, c, u);
    cert.verified = !cert.witness.has_value();
    return cert;
}

AnnihilationCertificate verify_annihilator(const LaurentPoly& f, const Configuration& c, const IntBox& probes) {
    if (probes.rank() != c.rank()) throw ContractError("verify_annihilator: probe box rank does not match");
    AnnihilationCertificate cert = start(f, c);
    probes.for_each([&](const GroupPoint& u) { record(cert, f, c, u); });
    cert.verified = !cert.witness.has_value();
    return cert;
}

PeriodizerSearch find_periodizer(const Configuration& c, const Shape& d, const std::vector<GroupPoint>& probes) {
    if (probes.empty()) throw ContractError("find_periodizer: empty probe set");
    if (d.rank() != c.rank()) throw ContractError("find_periodizer: shape rank does not match configuration");
    PeriodizerSearch out;
    out.probes = probes.size();
    std::set<std::vector<Rational>> rows;
    for (const auto& v : probes) {
        std::vector<Rational> row{Rational(1)};
        for (const auto& di : d.points()) row.push_back(c.eval(di + v));
        rows.insert(std::move(row));
    }
    out.distinct_rows = rows.size();
    const RationalMatrix a(rows.begin(), rows.end());
    std::vector<std::size_t> order;
    for (std::size_t i = 1; i <= d.size(); ++i) order.push_back(i);
    order.push_back(0);
    const auto kernel = nullspace_vector(a, order);
    if (!kernel) return out;
    out.kernel = *kernel;
    LaurentPoly g(c.basis());
    for (std::size_t i = 0; i < d.size(); ++i) {
        g += LaurentPoly::monomial(c.basis(), -d.points()[i], Rational((*kernel)[i + 1]));
    }
    if (!g.is_zero()) out.candidate = std::move(g);
    return out;
}

std::optional<ComposedAnnihilator> compose_annihilator(const Configuration& c, const LaurentPoly& g,
                                                       const IntBox& probes, long max_norm) {
    AnnihilationCertificate direct = verify_annihilator(g, c, probes);
    if (direct.verified) return ComposedAnnihilator{g, std::nullopt, std::move(direct)};
    std::vector<GroupPoint> vs;
    IntBox::cube(c.rank(), max_norm).for_each([&](const GroupPoint& v) {
        if (!v.is_zero()) vs.push_back(v);
    });
    auto max_norm_of = [](const GroupPoint& v) {
        Integer m = 0;
        for (const auto& x : v.coords()) m = std::max<Integer>(m, abs(x));
        return m;
    };
    std::stable_sort(vs.begin(), vs.end(),
                     [&](const GroupPoint& a, const GroupPoint& b) { return max_norm_of(a) < max_norm_of(b); });
    for (const auto& v : vs) {
        const LaurentPoly f = difference_poly(c.basis(), v) * g;
        AnnihilationCertificate cert = verify_annihilator(f, c, probes);
        if (cert.verified) return ComposedAnnihilator{g, v, std::move(cert)};
    }
    return std::nullopt;
}

Integer dilation_bound(const LaurentPoly& f, const Alphabet& alphabet) {
    if (f.is_zero()) throw ContractError("dilation_bound: f must be nonzero");
    if (!f.is_integral()) throw ContractError("dilation_bound: f must have integer coefficients");
    if (!alphabet.is_integral()) throw ContractError("dilation_bound: alphabet must be integral");
    const Rational s = alphabet.max_abs() * f.l1_norm();
    return s.get_num();
}

bool dilation_admissible(const Integer& k, const Integer& s) {
    if (k == 0) throw ContractError("dilation_admissible: k must be nonzero");
    const Integer n = abs(k);
    for (Integer p = 2; p <= s; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

DilationWitness check_dilation(const LaurentPoly& f, const Configuration& c, const Integer& s,
                               const std::vector<Integer>& ks, const IntBox& probes) {
    DilationWitness w;
    w.s = s;
    for (const auto& k : ks) {
        const bool pass = verify_annihilator(dilate(f, k), c, probes).verified;
        if (dilation_admissible(k, s)) {
            w.tested_k.push_back(k);
            if (!pass) w.failed_k.push_back(k);
        } else {
            w.out_of_contract_k.push_back(k);
            if (pass) w.out_of_contract_pass.push_back(k);
        }
    }
    w.all_pass = w.failed_k.empty();
    return w;
}

LaurentPoly special_annihilator(const LaurentPoly& f, const GroupPoint& u, const Integer& r) {
    if (r < 1) throw ContractError("special_annihilator: r must be positive");
    if (f.coeff(u) == 0) throw ContractError("special_annihilator: " + u.to_string() + " is not in the support");
    LaurentPoly out = LaurentPoly::constant(f.basis(), 1);
    for (const auto& [v, a] : f.terms()) {
        if (v == u) continue;
        out = out * difference_poly(f.basis(), r * (v - u));
    }
    return out;
}

std::optional<GroupPoint> difference_vector(const LaurentPoly& f) {
    if (f.size() != 2) return std::nullopt;
    const GroupPoint zero = GroupPoint::zero(f.rank());
    if (f.coeff(zero) != -1) return std::nullopt;
    for (const auto& [v, a] : f.terms()) {
        if (v != zero) return a == 1 ? std::optional<GroupPoint>(v) : std::nullopt;
    }
    return std::nullopt;
}

MergeResult merge_parallel(const std::vector<LaurentPoly>& factors, const Configuration& c, const IntBox& probes,
                           long bound) {
    MergeResult out;
    if (factors.empty()) throw ContractError("merge_parallel: no factors");
    std::vector<GroupPoint> dirs;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        require_same_basis(factors[i].basis(), c.basis(), "merge_parallel");
        const auto v = difference_vector(factors[i]);
        if (!v) throw ContractError("merge_parallel: factor " + std::to_string(i) + " is not of the form X^v - 1");
        const GroupPoint w = v->primitive();
        const auto it = std::find(dirs.begin(), dirs.end(), w);
        if (it == dirs.end()) {
            dirs.push_back(w);
            groups.push_back({i});
        } else {
            groups[static_cast<std::size_t>(it - dirs.begin())].push_back(i);
        }
    }
    // current[g] is the product standing in for group g.
    std::vector<LaurentPoly> current;
    for (const auto& g : groups) {
        LaurentPoly p = LaurentPoly::constant(c.basis(), 1);
        for (std::size_t i : g) p = p * factors[i];
        current.push_back(std::move(p));
    }
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].size() == 1) continue;
        LaurentPoly others = LaurentPoly::constant(c.basis(), 1);
        for (std::size_t h = 0; h < groups.size(); ++h) {
            if (h != g) others = others * current[h];
        }
        const Configuration residual = apply_poly(others, c);
        bool found = false;
        for (long t = 1; t <= bound && !found; ++t) {
            const LaurentPoly cand = difference_poly(c.basis(), Integer(t) * dirs[g]);
            if (verify_annihilator(cand, residual, probes).verified) {
                current[g] = cand;
                found = true;
            }
        }
        if (!found) {
            out.diagnostic = "period search bound " + std::to_string(bound) + " exceeded in direction " +
                             dirs[g].to_string();
            out.factors = current;
            return out;
        }
    }
    out.factors = current;
    LaurentPoly product = LaurentPoly::constant(c.basis(), 1);
    for (const auto& f : current) product = product * f;
    out.certificate = verify_annihilator(product, c, probes);
    out.ok = out.certificate->verified;
    if (!out.ok) out.diagnostic = "merged product does not annihilate on the probes";
    return out;
}

}  // namespace aperiodic
