#include "aperiodic/decomposition.hpp"

#include "aperiodic/error.hpp"
#include "aperiodic/linalg.hpp"

#include <algorithm>
#include <map>

namespace aperiodic {

namespace {

std::optional<IntBox> intersect(const IntBox& a, const IntBox& b) {
    IntBox out = a;
    for (std::size_t i = 0; i < a.rank(); ++i) {
        out.lower[i] = std::max(a.lower[i], b.lower[i]);
        out.upper[i] = std::min(a.upper[i], b.upper[i]);
    }
    if (out.empty()) return std::nullopt;
    return out;
}

void require_independent(const GroupPoint& a, const GroupPoint& b, const char* what) {
    if (a.is_zero() || b.is_zero()) throw ContractError(std::string(what) + ": zero direction");
    if (parallel(a, b)) {
        throw ContractError(std::string(what) + ": directions " + a.to_string() + " and " + b.to_string() +
                            " are parallel");
    }
}

// Representative of u modulo the lattice spanned by the rows of an echelon matrix.
GroupPoint reduce(GroupPoint u, const IntMatrix& hnf) {
    for (const auto& row : hnf) {
        std::size_t p = 0;
        while (row[p] == 0) ++p;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), u[p].get_mpz_t(), row[p].get_mpz_t());
        for (std::size_t i = 0; i < u.rank(); ++i) u[i] -= q * row[i];
    }
    return u;
}

// 4 * squared distance from u to the center of the box.
Integer center_distance(const GroupPoint& u, const IntBox& box) {
    Integer s = 0;
    for (std::size_t i = 0; i < u.rank(); ++i) {
        const Integer t = 2 * u[i] - box.lower[i] - box.upper[i];
        s += t * t;
    }
    return s;
}

}  // namespace

WindowFunction::WindowFunction(IntBox box) : box_(std::move(box)) {
    if (box_.empty()) throw ContractError("window function on an empty box");
    const std::size_t n = static_cast<std::size_t>(box_.count());
    stride_.assign(box_.rank(), 1);
    for (std::size_t i = box_.rank(); i-- > 1;) {
        stride_[i - 1] = stride_[i] * Integer(box_.upper[i] - box_.lower[i] + 1).get_si();
    }
    values_.assign(n, Rational(0));
    mask_.assign(n, 0);
}

WindowFunction WindowFunction::sample(const Configuration& c, const IntBox& box) {
    if (box.rank() != c.rank()) throw ContractError("window rank does not match configuration");
    WindowFunction f(box);
    box.for_each([&](const GroupPoint& u) {
        if (c.in_domain(u)) f.set(u, c.eval(u));
    });
    return f;
}

std::optional<std::size_t> WindowFunction::index(const GroupPoint& u) const {
    if (u.rank() != box_.rank() || !box_.contains(u)) return std::nullopt;
    long idx = 0;
    for (std::size_t i = 0; i < u.rank(); ++i) idx += Integer(u[i] - box_.lower[i]).get_si() * stride_[i];
    return static_cast<std::size_t>(idx);
}

bool WindowFunction::defined(const GroupPoint& u) const {
    const auto i = index(u);
    return i && mask_[*i];
}

const Rational& WindowFunction::at(const GroupPoint& u) const {
    const auto i = index(u);
    if (!i || !mask_[*i]) throw DomainError("window function undefined at " + u.to_string());
    return values_[*i];
}

void WindowFunction::set(const GroupPoint& u, Rational value) {
    const auto i = index(u);
    if (!i) throw DomainError(u.to_string() + " lies outside " + box_.to_string());
    values_[*i] = std::move(value);
    mask_[*i] = 1;
}

std::optional<IntBox> WindowFunction::defined_core() const {
    // An undefined point u forces a shrink beyond its distance to the nearest face.
    Integer need = 0;
    box_.for_each([&](const GroupPoint& u) {
        if (defined(u)) return;
        Integer d = u[0] - box_.lower[0];
        for (std::size_t i = 0; i < u.rank(); ++i) {
            d = std::min<Integer>(d, u[i] - box_.lower[i]);
            d = std::min<Integer>(d, box_.upper[i] - u[i]);
        }
        need = std::max<Integer>(need, d + 1);
    });
    IntBox core = box_.shrunk(std::vector<Integer>(box_.rank(), need));
    if (core.empty()) return std::nullopt;
    return core;
}

WindowFunction WindowFunction::restricted(const IntBox& sub) const {
    const auto inside = intersect(box_, sub);
    if (!inside || !(*inside == sub)) throw ContractError("restriction box " + sub.to_string() + " leaves " + box_.to_string());
    WindowFunction out(sub);
    sub.for_each([&](const GroupPoint& u) {
        if (defined(u)) out.set(u, at(u));
    });
    return out;
}

WindowFunction WindowFunction::difference(const GroupPoint& v) const {
    WindowFunction out(box_);
    box_.for_each([&](const GroupPoint& u) {
        const GroupPoint w = u - v;
        if (defined(u) && defined(w)) out.set(u, at(w) - at(u));
    });
    return out;
}

IntegrationResult integrate_step(const WindowFunction& c_prime, const GroupPoint& v1, const GroupPoint& v2) {
    const IntBox& box = c_prime.box();
    if (v1.rank() != box.rank() || v2.rank() != box.rank()) throw ContractError("integrate_step: rank mismatch");
    require_independent(v1, v2, "integrate_step");

    const IntMatrix hnf = hermite_normal_form({v1.coords(), v2.coords()});
    std::map<GroupPoint, std::pair<Integer, GroupPoint>> seeds;
    box.for_each([&](const GroupPoint& u) {
        const Integer d = center_distance(u, box);
        auto [it, inserted] = seeds.try_emplace(reduce(u, hnf), d, u);
        if (!inserted && d < it->second.first) it->second = {d, u};
    });

    IntegrationResult out;
    out.c = WindowFunction(box);
    for (const auto& [rep, seed] : seeds) {
        for (int dir : {1, -1}) {
            for (GroupPoint p = dir > 0 ? seed.second : seed.second - v2; box.contains(p);
                 p = dir > 0 ? p + v2 : p - v2) {
                out.c.set(p, 0);
                Rational val = 0;
                for (GroupPoint q = p + v1; box.contains(q) && c_prime.defined(q); q = q + v1) {
                    val -= c_prime.at(q);
                    out.c.set(q, val);
                }
                val = 0;
                for (GroupPoint q = p; box.contains(q - v1) && c_prime.defined(q); q = q - v1) {
                    val += c_prime.at(q);
                    out.c.set(q - v1, val);
                }
            }
        }
    }

    out.inner = out.c.defined_core();
    if (!out.inner) {
        out.diagnostic = "no sub-window of " + box.to_string() + " is reachable from the seed lines";
        return out;
    }
    bool ok = true;
    out.inner->for_each([&](const GroupPoint& u) {
        if (!ok) return;
        const GroupPoint a = u - v1;
        if (out.inner->contains(a)) {
            if (!c_prime.defined(u)) {
                ok = false;
                out.diagnostic = "c' undefined at " + u.to_string();
            } else if (out.c.at(a) - out.c.at(u) != c_prime.at(u)) {
                ok = false;
                out.diagnostic = "(X^v1 - 1) c differs from c' at " + u.to_string();
            }
        }
        const GroupPoint b = u - v2;
        if (ok && out.inner->contains(b) && out.c.at(b) != out.c.at(u)) {
            ok = false;
            out.diagnostic = "(X^v2 - 1) c is nonzero at " + u.to_string() + "; c' is not v2-periodic";
        }
    });
    out.verified = ok;
    return out;
}

namespace {

struct Level {
    std::vector<WindowFunction> parts;
    std::string diagnostic;
};

Level decompose_rec(const WindowFunction& f, const std::vector<GroupPoint>& dirs, std::size_t m) {
    const auto core = f.defined_core();
    if (!core) return {{}, "window exhausted with " + std::to_string(m) + " directions left"};
    const WindowFunction F = f.restricted(*core);
    if (m == 1) return {{F}, {}};

    const GroupPoint& vm = dirs[m - 1];
    Level lower = decompose_rec(F.difference(vm), dirs, m - 1);
    if (lower.parts.empty()) return lower;

    std::vector<WindowFunction> integrated;
    IntBox box = *core;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        IntegrationResult r = integrate_step(lower.parts[i], vm, dirs[i]);
        if (!r.inner) return {{}, "integrating along " + vm.to_string() + ": " + r.diagnostic};
        const auto next = intersect(box, *r.inner);
        if (!next) return {{}, "window exhausted while integrating along " + vm.to_string()};
        box = *next;
        integrated.push_back(std::move(r.c));
    }
    Level out;
    WindowFunction rest = F.restricted(box);
    for (auto& h : integrated) {
        WindowFunction part = h.restricted(box);
        box.for_each([&](const GroupPoint& u) { rest.set(u, rest.at(u) - part.at(u)); });
        out.parts.push_back(std::move(part));
    }
    out.parts.push_back(std::move(rest));
    return out;
}

}  // namespace

DecompositionWitness decompose(const Configuration& c, const std::vector<GroupPoint>& directions,
                               const IntBox& window) {
    if (directions.empty()) throw ContractError("decompose: no directions");
    for (const auto& v : directions) {
        if (v.rank() != c.rank()) throw ContractError("decompose: direction rank does not match configuration");
        if (v.is_zero()) throw ContractError("decompose: zero direction");
    }
    for (std::size_t i = 0; i < directions.size(); ++i) {
        for (std::size_t j = i + 1; j < directions.size(); ++j) require_independent(directions[i], directions[j], "decompose");
    }
    DecompositionWitness w;
    w.outer_window = window;
    Level top = decompose_rec(WindowFunction::sample(c, window), directions, directions.size());
    if (top.parts.empty()) {
        w.diagnostic = top.diagnostic;
        return w;
    }
    w.inner_window = top.parts.front().box();
    for (std::size_t i = 0; i < directions.size(); ++i) w.components.push_back({directions[i], std::move(top.parts[i])});
    for (std::size_t i = 0; i < window.rank(); ++i) {
        w.margin.push_back(std::max<Integer>(w.inner_window->lower[i] - window.lower[i],
                                             window.upper[i] - w.inner_window->upper[i]));
    }
    w.certified = check_decomposition(w, c);
    if (!w.certified) w.diagnostic = "certificate identities fail on the inner window";
    return w;
}

bool check_decomposition(const DecompositionWitness& w, const Configuration& c) {
    if (!w.inner_window || w.components.empty()) return false;
    const IntBox& inner = *w.inner_window;
    for (const auto& comp : w.components) {
        const auto inside = intersect(comp.values.box(), inner);
        if (!inside || !(*inside == inner)) return false;
    }
    bool ok = true;
    inner.for_each([&](const GroupPoint& u) {
        if (!ok) return;
        Rational sum = 0;
        for (const auto& comp : w.components) {
            if (!comp.values.defined(u)) {
                ok = false;
                return;
            }
            sum += comp.values.at(u);
            const GroupPoint b = u - comp.direction;
            if (inner.contains(b) && comp.values.at(b) != comp.values.at(u)) ok = false;
        }
        if (ok && (!c.in_domain(u) || sum != c.eval(u))) ok = false;
    });
    return ok;
}

IntBox required_window(const IntBox& inner, const std::vector<Integer>& margin) {
    if (margin.size() != inner.rank()) throw ContractError("required_window: margin rank does not match");
    IntBox out = inner;
    for (std::size_t i = 0; i < inner.rank(); ++i) {
        out.lower[i] -= margin[i];
        out.upper[i] += margin[i];
    }
    return out;
}

}  // namespace aperiodic
