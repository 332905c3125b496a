#include "aperiodic/delone.hpp"

#include "aperiodic/error.hpp"
#include "aperiodic/linalg.hpp"
#include "neighbor_index.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace aperiodic {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::consistent: return "consistent";
        case Verdict::fails: return "fails";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

RationalBox inner_half(const RationalBox& w) {
    RationalBox out = w;
    for (std::size_t i = 0; i < w.dim(); ++i) {
        const Rational quarter = (w.upper[i] - w.lower[i]) / 4;
        out.lower[i] = w.lower[i] + quarter;
        out.upper[i] = w.upper[i] - quarter;
    }
    return out;
}

namespace {

struct Closest {
    Rational dist_sq;
    std::size_t i = 0;
    std::size_t j = 0;
    bool found = false;
};

// Exact closest pair among `idx` by a sweep on the first coordinate.
Closest closest_pair(const std::vector<RationalVector>& pts, std::vector<std::size_t> idx) {
    Closest best;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a][0] < pts[b][0]; });
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            const Rational dx = pts[idx[b]][0] - pts[idx[a]][0];
            if (best.found && dx * dx >= best.dist_sq) break;
            const Rational d = norm_sq(sub(pts[idx[b]], pts[idx[a]]));
            if (!best.found || d < best.dist_sq) {
                best = Closest{d, std::min(idx[a], idx[b]), std::max(idx[a], idx[b]), true};
            }
        }
    }
    return best;
}

std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

Rational max_extent(const RationalBox& w) {
    Rational e = 0;
    for (std::size_t i = 0; i < w.dim(); ++i) e = std::max<Rational>(e, w.upper[i] - w.lower[i]);
    return e;
}

Rational min_extent(const RationalBox& w) {
    Rational e = w.upper[0] - w.lower[0];
    for (std::size_t i = 1; i < w.dim(); ++i) e = std::min<Rational>(e, w.upper[i] - w.lower[i]);
    return e;
}

struct Hole {
    Rational dist_sq;
    RationalVector center;
};

// Largest nearest-point squared distance over the grid points of `region`.
std::optional<Hole> grid_hole(const PointCloud& s, const detail::NeighborIndex& index, double cell,
                              const RationalBox& region, const Rational& pitch) {
    for (std::size_t i = 0; i < region.dim(); ++i) {
        if (region.lower[i] > region.upper[i]) return std::nullopt;
    }
    std::vector<std::vector<Rational>> axes(region.dim());
    for (std::size_t i = 0; i < region.dim(); ++i) {
        for (Rational x = region.lower[i]; x < region.upper[i]; x += pitch) axes[i].push_back(x);
        axes[i].push_back(region.upper[i]);
    }
    std::optional<Hole> best;
    std::vector<std::size_t> k(region.dim(), 0);
    RationalVector g(region.dim());
    while (true) {
        for (std::size_t i = 0; i < region.dim(); ++i) g[i] = axes[i][k[i]];
        Rational radius = cell;
        while (true) {
            std::optional<Rational> nearest;
            index.candidates(g, radius, [&](std::size_t p) {
                const Rational d = norm_sq(sub(s.embedded()[p], g));
                if (!nearest || d < *nearest) nearest = d;
            });
            if (nearest && *nearest <= radius * radius) {
                if (!best || *nearest > best->dist_sq) best = Hole{*nearest, g};
                break;
            }
            radius *= 2;
        }
        std::size_t d = 0;
        while (d < k.size()) {
            if (++k[d] < axes[d].size()) break;
            k[d] = 0;
            ++d;
        }
        if (d == k.size()) break;
    }
    return best;
}

}  // namespace

DeloneReport delone_constants(const PointCloud& s, const DeloneOptions& options) {
    if (s.size() < 2) throw ContractError("delone_constants: at least two points required");
    DeloneReport rep;
    const auto& pts = s.embedded();
    const Closest c = closest_pair(pts, all_indices(s.size()));
    rep.min_distance_sq = c.dist_sq;
    rep.closest_pair = {s.points()[c.i], s.points()[c.j]};
    rep.packing_radius = sqrt_bracket(c.dist_sq / 4);
    rep.uniformly_discrete = c.dist_sq > 0;

    if (s.dim() == 1) {
        Rational gap = 0;
        std::size_t at = 0;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            const Rational g = pts[i + 1][0] - pts[i][0];
            if (g > gap) {
                gap = g;
                at = i;
            }
        }
        rep.covering_radius = Interval{gap / 2, gap / 2};
        rep.margin = gap / 2;
        rep.grid_pitch = 0;
        rep.deepest_hole = {(pts[at][0] + pts[at + 1][0]) / 2};
        rep.relatively_dense_in_window = true;
        return rep;
    }

    const RationalBox& w = s.window();
    Rational pitch = options.grid_pitch;
    if (pitch <= 0) pitch = max_extent(w) / (s.dim() == 2 ? 96 : 24);
    rep.grid_pitch = pitch;
    const double cell = std::max(to_double(max_extent(w)) / std::max(1.0, std::sqrt(double(s.size()))), 1e-9);
    const detail::NeighborIndex index(pts, cell);
    const Rational pad = sqrt_bracket(Rational(s.dim()) / 4).upper * pitch;

    auto bracket = [&](const Hole& h) {
        const Interval r = sqrt_bracket(h.dist_sq);
        return Interval{r.lower, r.upper + pad};
    };

    std::optional<Hole> first = grid_hole(s, index, cell, w, pitch);
    if (!first) throw ContractError("delone_constants: empty window");
    Rational margin = bracket(*first).upper;
    for (int iter = 0; iter < 24; ++iter) {
        const auto hole = grid_hole(s, index, cell, w.shrunk(margin), pitch);
        if (!hole) throw ContractError("delone_constants: window interior is empty after the margin " + to_string(margin));
        const Interval r = bracket(*hole);
        if (r.upper <= margin) {
            rep.covering_radius = r;
            rep.margin = margin;
            rep.deepest_hole = hole->center;
            rep.relatively_dense_in_window = true;
            return rep;
        }
        margin = r.upper;
    }
    throw ContractError("delone_constants: covering radius search did not settle on this window");
}

PatchContent patch_at(const PointCloud& s, std::size_t center, const Rational& t) {
    PatchContent out;
    const Rational t2 = t * t;
    const auto& pts = s.embedded();
    const GroupPoint& c = s.points()[center];
    if (s.dim() == 1) {
        for (std::size_t j = center + 1; j-- > 0;) {
            const Rational d = pts[center][0] - pts[j][0];
            if (d * d > t2) break;
            out.emplace_back(s.points()[j] - c, s.colors()[j]);
        }
        for (std::size_t j = center + 1; j < s.size(); ++j) {
            const Rational d = pts[j][0] - pts[center][0];
            if (d * d > t2) break;
            out.emplace_back(s.points()[j] - c, s.colors()[j]);
        }
    } else {
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (norm_sq(sub(pts[j], pts[center])) <= t2) out.emplace_back(s.points()[j] - c, s.colors()[j]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::set<PatchContent> collect_patches(const PointCloud& s, const Rational& t, std::size_t& centers) {
    std::set<PatchContent> seen;
    centers = 0;
    const auto& pts = s.embedded();
    if (s.dim() == 1) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s.window().face_distance(pts[i]) < t) continue;
            ++centers;
            seen.insert(patch_at(s, i, t));
        }
        return seen;
    }
    const double cell = std::max(to_double(t), 1e-9);
    const detail::NeighborIndex index(pts, cell);
    const Rational t2 = t * t;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.window().face_distance(pts[i]) < t) continue;
        ++centers;
        PatchContent p;
        index.candidates(pts[i], t, [&](std::size_t j) {
            if (norm_sq(sub(pts[j], pts[i])) <= t2) p.emplace_back(s.points()[j] - s.points()[i], s.colors()[j]);
        });
        std::sort(p.begin(), p.end());
        seen.insert(std::move(p));
    }
    return seen;
}

}  // namespace

PatchCount patch_count(const PointCloud& s, const Rational& t) {
    if (t < 0) throw ContractError("patch_count: T must be nonnegative");
    PatchCount out;
    const auto seen = collect_patches(s, t, out.centers);
    if (out.centers == 0) {
        throw ContractError("patch_count: no center lies at distance >= " + to_string(t) + " from the window faces");
    }
    out.count = seen.size();
    return out;
}

LagariasReport lagarias_test(const PointCloud& s, const std::vector<Rational>& t_grid, const DeloneOptions& options) {
    LagariasReport rep;
    rep.covering_upper = delone_constants(s, options).covering_radius.upper;
    for (const auto& t : t_grid) {
        LagariasPoint p;
        p.t = t;
        p.n = patch_count(s, t).count;
        p.triggered = Rational(2 * p.n) * rep.covering_upper < t;
        if (p.triggered && !rep.trigger) rep.trigger = t;
        rep.curve.push_back(p);
    }
    return rep;
}

ClassReport class_tests(const PointCloud& s, const ClassOptions& options) {
    ClassReport rep;
    rep.constants = delone_constants(s, options.delone);
    const auto& pts = s.embedded();
    const RationalBox inner = inner_half(s.window());

    rep.flc_radius = options.flc_radius > 0 ? options.flc_radius : 2 * rep.constants.covering_radius.upper;
    const Rational rho2 = rep.flc_radius * rep.flc_radius;
    std::set<GroupPoint> inner_diffs;
    std::set<GroupPoint> outer_diffs;
    {
        const double cell = std::max(to_double(rep.flc_radius), 1e-9);
        const detail::NeighborIndex index(pts, cell);
        for (std::size_t i = 0; i < s.size(); ++i) {
            const bool i_inner = inner.contains(pts[i]);
            index.candidates(pts[i], rep.flc_radius, [&](std::size_t j) {
                if (norm_sq(sub(pts[j], pts[i])) > rho2) return;
                GroupPoint d = s.points()[j] - s.points()[i];
                if (i_inner && inner.contains(pts[j])) inner_diffs.insert(d);
                outer_diffs.insert(std::move(d));
            });
        }
    }
    rep.flc_inner = inner_diffs.size();
    rep.flc_outer = outer_diffs.size();
    rep.flc = Verdict::consistent;
    for (const auto& d : outer_diffs) {
        if (!inner_diffs.count(d)) {
            rep.flc = Verdict::fails;
            rep.flc_witness = d;
            break;
        }
    }

    rep.epsilon = options.epsilon > 0 ? options.epsilon : rep.constants.packing_radius.lower / 4;
    const Rational core = min_extent(s.window()) / 2;
    const Rational core2 = core * core;
    std::map<GroupPoint, RationalVector> diffs;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            RationalVector e = sub(pts[j], pts[i]);
            if (norm_sq(e) > core2) continue;
            diffs.emplace(s.points()[j] - s.points()[i], std::move(e));
        }
    }
    std::vector<GroupPoint> keys;
    std::vector<RationalVector> emb;
    for (auto& [g, e] : diffs) {
        keys.push_back(g);
        emb.push_back(e);
    }
    const Closest near = keys.size() >= 2 ? closest_pair(emb, all_indices(keys.size())) : Closest{};
    if (near.found && near.dist_sq < rep.epsilon * rep.epsilon) {
        rep.meyer = Verdict::fails;
        rep.meyer_witness = std::make_pair(keys[near.i], keys[near.j]);
        rep.meyer_witness_distance_sq = near.dist_sq;
    } else {
        rep.meyer = Verdict::consistent;
        if (near.found) rep.meyer_witness_distance_sq = near.dist_sq;
    }

    IntMatrix rows;
    for (std::size_t i = 1; i < s.size(); ++i) rows.push_back((s.points()[i] - s.points()[0]).coords());
    rep.difference_rank = matrix_rank(rows);
    rep.finitely_generated = true;
    return rep;
}

MeyerHTReport meyer_ht(const PointCloud& s, const Rational& t, const DeloneOptions& options) {
    if (t < 0) throw ContractError("meyer_ht: T must be nonnegative");
    MeyerHTReport rep;
    const Rational r = delone_constants(s, options).covering_radius.upper;
    rep.covering_upper = r;
    const auto& pts = s.embedded();
    const RationalBox& w = s.window();

    RationalVector mid(w.dim());
    for (std::size_t i = 0; i < w.dim(); ++i) mid[i] = (w.lower[i] + w.upper[i]) / 2;
    std::size_t o = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (norm_sq(sub(pts[i], mid)) < norm_sq(sub(pts[o], mid))) o = i;
    }
    rep.origin = s.points()[o];
    if (w.face_distance(pts[o]) < std::max(t, r)) throw ContractError("meyer_ht: window too small for T");

    // U: s_i + d - o within B_R for d = s_j - s_k.
    const double cell = std::max(to_double(r), 1e-9);
    const detail::NeighborIndex index(pts, cell);
    std::map<GroupPoint, RationalVector> diffs;
    for (std::size_t j = 0; j < s.size(); ++j) {
        for (std::size_t k = 0; k < s.size(); ++k) diffs.emplace(s.points()[j] - s.points()[k], sub(pts[j], pts[k]));
    }
    const Rational r2 = r * r;
    std::set<GroupPoint> u;
    for (const auto& [d, e] : diffs) {
        const RationalVector target = sub(pts[o], e);
        index.candidates(target, r, [&](std::size_t i) {
            if (norm_sq(sub(pts[i], target)) <= r2) u.insert(s.points()[i] + d - rep.origin);
        });
    }
    rep.u.assign(u.begin(), u.end());

    std::set<GroupPoint> h(u.begin(), u.end());
    const Rational t2 = t * t;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (norm_sq(sub(pts[i], pts[o])) <= t2) h.insert(s.points()[i] - rep.origin);
    }
    rep.h_t.assign(h.begin(), h.end());

    // Translations t = s - h whose shape stays well inside the window.
    const Rational margin = t + 2 * r;
    std::set<GroupPoint> translations;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (const auto& hp : rep.h_t) translations.insert(s.points()[i] - hp);
    }
    std::set<std::vector<GroupPoint>> seen;
    for (const auto& tr : translations) {
        if (w.face_distance(s.basis().embed(tr)) < margin) continue;
        std::vector<GroupPoint> pattern;
        for (const auto& hp : rep.h_t) {
            if (s.contains(tr + hp)) pattern.push_back(hp);
        }
        if (!pattern.empty()) seen.insert(std::move(pattern));
    }
    rep.lhs = seen.size() + 1;
    rep.n_t_plus_r = patch_count(s, t + r).count;
    rep.rhs = 1 + rep.u.size() * rep.n_t_plus_r;
    rep.holds = rep.lhs <= rep.rhs;
    return rep;
}

MinkowskiReport minkowski_flc(const PointCloud& s, const std::vector<GroupPoint>& f, const ClassOptions& options) {
    MinkowskiReport rep{s.minkowski_sum(f), 0, 0, Verdict::inconclusive, std::nullopt, {}};
    const PointCloud& sum = rep.sum;
    if (sum.size() < 2) return rep;
    const RationalBox inner = inner_half(sum.window());
    std::vector<std::size_t> inner_idx;
    for (std::size_t i = 0; i < sum.size(); ++i) {
        if (inner.contains(sum.embedded()[i])) inner_idx.push_back(i);
    }
    const Closest outer = closest_pair(sum.embedded(), all_indices(sum.size()));
    rep.min_distance_sq_outer = outer.dist_sq;
    if (inner_idx.size() < 2) return rep;
    const Closest in = closest_pair(sum.embedded(), inner_idx);
    rep.min_distance_sq_inner = in.dist_sq;
    if (outer.dist_sq < in.dist_sq) {
        rep.uniformly_discrete = Verdict::fails;
        rep.witness = std::make_pair(sum.points()[outer.i], sum.points()[outer.j]);
        return rep;
    }
    rep.uniformly_discrete = Verdict::consistent;
    rep.classes = class_tests(sum, options);
    return rep;
}

}  // namespace aperiodic
