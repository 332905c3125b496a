#include "aperiodic/period.hpp"

#include "aperiodic/error.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <map>
#include <set>

namespace aperiodic {

std::string to_string(LinePeriodStatus s) {
    switch (s) {
        case LinePeriodStatus::found: return "found";
        case LinePeriodStatus::rejected: return "rejected";
        case LinePeriodStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

// A colored point set on a line: positions lambda in increasing order.
struct Line {
    struct Entry {
        Rational lambda;
        GroupPoint point;
        Rational color;
    };
    std::vector<Entry> entries;
    Rational lo;
    Rational hi;
    std::map<GroupPoint, std::pair<Rational, Rational>> index;  // point -> (lambda, color)

    void finish() {
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.lambda < b.lambda; });
        for (const auto& e : entries) index.emplace(e.point, std::make_pair(e.lambda, e.color));
    }
};

bool line_translation_test(const Line& line, const GroupPoint& p, const Rational& length) {
    for (int sign : {1, -1}) {
        const Rational shift = sign * length;
        for (const auto& e : line.entries) {
            const Rational target = e.lambda + shift;
            if (target < line.lo || target > line.hi) continue;
            const auto it = line.index.find(sign > 0 ? e.point + p : e.point - p);
            if (it == line.index.end() || it->second.second != e.color) return false;
        }
    }
    return true;
}

RepeatBound repeat_bound(const Line& line, const Rational& k) {
    RepeatBound b;
    std::set<Rational> colors;
    for (const auto& e : line.entries) colors.insert(e.color);
    b.alphabet_size = colors.size() + 1;  // the value 0 off the support
    if (line.entries.size() < 2) return b;
    Rational min_gap;
    Rational max_gap = 0;
    for (std::size_t i = 0; i + 1 < line.entries.size(); ++i) {
        const Rational g = line.entries[i + 1].lambda - line.entries[i].lambda;
        if (i == 0 || g < min_gap) min_gap = g;
        max_gap = std::max(max_gap, g);
    }
    std::set<GroupPoint> local;
    for (std::size_t i = 0; i < line.entries.size(); ++i) {
        for (std::size_t j = i; j < line.entries.size(); ++j) {
            if (line.entries[j].lambda - line.entries[i].lambda > max_gap) break;
            local.insert(line.entries[j].point - line.entries[i].point);
            local.insert(line.entries[i].point - line.entries[j].point);
        }
    }
    b.local_differences = local.size();
    b.exponent = min_gap > 0 ? floor(k / min_gap) : Integer(0);
    const double e = b.exponent.get_d();
    const double lg = e * std::log10(static_cast<double>(b.local_differences)) +
                      std::log10(std::log10(static_cast<double>(b.alphabet_size)));
    b.log10_m = lg > std::log10(DBL_MAX) ? DBL_MAX : std::pow(10.0, lg);
    return b;
}

Period1D detect_on_line(const Line& line, const Rational& k, const PeriodOptions& options) {
    if (k <= 0) throw ContractError("detect_period_1d: k must be positive");
    Period1D out;
    out.bound = repeat_bound(line, k);
    const auto& es = line.entries;
    using Content = std::vector<std::pair<GroupPoint, Rational>>;
    std::map<Content, std::vector<std::size_t>> classes;
    std::size_t first = 0;
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (es[i].lambda - k < line.lo) continue;
        while (es[first].lambda < es[i].lambda - k) ++first;
        Content c;
        for (std::size_t j = first; j <= i; ++j) c.emplace_back(es[j].point - es[i].point, es[j].color);
        classes[std::move(c)].push_back(i);
        ++out.anchors;
    }
    if (out.anchors < 2) {
        out.diagnostic = "window holds fewer than two anchored windows of length " + to_string(k);
        return out;
    }
    const Rational span = line.hi - line.lo;
    const Rational cap = span / Rational(options.min_period_repeats);
    std::map<GroupPoint, Rational> candidates;
    for (const auto& [content, anchors] : classes) {
        for (std::size_t a = 0; a < anchors.size(); ++a) {
            for (std::size_t b = a + 1; b < anchors.size(); ++b) {
                const Rational len = es[anchors[b]].lambda - es[anchors[a]].lambda;
                if (len > cap) break;
                candidates.emplace(es[anchors[b]].point - es[anchors[a]].point, len);
            }
        }
    }
    std::vector<std::pair<Rational, GroupPoint>> ordered;
    for (const auto& [p, len] : candidates) ordered.emplace_back(len, p);
    std::sort(ordered.begin(), ordered.end());
    const std::size_t limit = options.search_bound > 0 ? static_cast<std::size_t>(options.search_bound) : ordered.size();
    for (const auto& [len, p] : ordered) {
        if (out.candidates_tested >= limit) {
            out.diagnostic = "candidate limit reached";
            return out;
        }
        ++out.candidates_tested;
        if (line_translation_test(line, p, len)) {
            out.period = p;
            out.length = len;
            return out;
        }
    }
    out.diagnostic = out.candidates_tested == 0
                         ? "no repeated anchored window within 1/" + std::to_string(options.min_period_repeats) +
                               " of the window"
                         : "every repeat failed the translation test";
    return out;
}

Line line_from_cloud(const PointCloud& s) {
    if (s.dim() != 1) throw ContractError("detect_period_1d: point set must be one-dimensional");
    Line line;
    line.lo = s.window().lower[0];
    line.hi = s.window().upper[0];
    for (std::size_t i = 0; i < s.size(); ++i) line.entries.push_back({s.embedded()[i][0], s.points()[i], s.colors()[i]});
    line.finish();
    return line;
}

GroupPoint coset_rep(const GroupPoint& u, const GroupPoint& w, std::size_t piv, Integer& t) {
    mpz_fdiv_q(t.get_mpz_t(), u[piv].get_mpz_t(), w[piv].get_mpz_t());
    return u - t * w;
}

Integer lcm_of(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

// c(u + p) == c(u) whenever both points are in the box.
bool box_translation_test(const Configuration& c, const IntBox& box, const GroupPoint& p) {
    bool ok = true;
    box.for_each([&](const GroupPoint& u) {
        if (!ok) return;
        const GroupPoint v = u + p;
        if (box.contains(v) && c.eval(u) != c.eval(v)) ok = false;
    });
    return ok;
}

LinePeriod group_line_period(const Configuration& c, const GroupPoint& w, const IntBox& probes,
                             const PeriodOptions& options) {
    LinePeriod out;
    out.line = LineStatus::group_line;
    std::size_t piv = 0;
    while (w[piv] == 0) ++piv;
    std::map<GroupPoint, std::map<Integer, Rational>> fibers;
    probes.for_each([&](const GroupPoint& u) {
        Integer t;
        const GroupPoint rep = coset_rep(u, w, piv, t);
        fibers[rep].emplace(t, c.eval(u));
    });
    Integer combined = 1;
    std::size_t informative = 0;
    for (const auto& [rep, values] : fibers) {
        FiberPeriod fp;
        fp.fiber = rep.to_string();
        fp.points = values.size();
        std::vector<Rational> seq;
        for (const auto& [t, v] : values) seq.push_back(v);
        const std::size_t n = seq.size();
        const std::size_t max_t = n / options.min_period_repeats;
        if (max_t == 0) {
            out.fibers.push_back(fp);
            continue;
        }
        ++informative;
        std::size_t bound = max_t;
        if (options.search_bound > 0) bound = std::min<std::size_t>(bound, static_cast<std::size_t>(options.search_bound));
        for (std::size_t t = 1; t <= bound; ++t) {
            bool periodic = true;
            for (std::size_t i = 0; i + t < n && periodic; ++i) periodic = seq[i] == seq[i + t];
            if (periodic) {
                fp.period = Integer(t) * w;
                combined = lcm_of(combined, Integer(t));
                break;
            }
        }
        if (!fp.period) {
            out.status = LinePeriodStatus::inconclusive;
            out.diagnostic = "fiber through " + fp.fiber + " shows no period within the window";
            out.fibers.push_back(fp);
            return out;
        }
        out.fibers.push_back(fp);
    }
    if (informative == 0) {
        out.diagnostic = "no fiber is long enough for " + std::to_string(options.min_period_repeats) + " repeats";
        return out;
    }
    const GroupPoint p = combined * w;
    if (box_translation_test(c, probes, p)) {
        out.status = LinePeriodStatus::found;
        out.period = p;
    } else {
        out.status = LinePeriodStatus::rejected;
        out.diagnostic = "combined period " + p.to_string() + " fails on the probe box";
    }
    return out;
}

LinePeriod embedded_line_period(const Configuration& c, const LaurentPoly& f, const LineInfo& info,
                                const IntBox& probes, const PeriodOptions& options) {
    LinePeriod out;
    out.line = info.status;
    const ExponentBasis& basis = c.basis();
    RationalVector dir;
    for (const auto& x : *info.embedded_direction) dir.push_back(Rational(x));
    const Rational dd = dot(dir, dir);

    Rational kmin;
    Rational kmax;
    bool first = true;
    for (const auto& [v, a] : f.terms()) {
        const Rational l = dot(basis.embed(v), dir) / dd;
        if (first || l < kmin) kmin = l;
        if (first || l > kmax) kmax = l;
        first = false;
    }
    const Rational k = kmax - kmin;

    std::map<RationalVector, Line> fibers;
    probes.for_each([&](const GroupPoint& u) {
        const Rational value = c.eval(u);
        if (value == 0) return;
        const RationalVector x = basis.embed(u);
        const Rational l = dot(x, dir) / dd;
        fibers[sub(x, scale(dir, l))].entries.push_back({l, u, value});
    });
    std::vector<GroupPoint> periods;
    for (auto& [offset, line] : fibers) {
        FiberPeriod fp;
        fp.fiber = to_string(offset);
        fp.points = line.entries.size();
        if (line.entries.size() < 2) {
            out.fibers.push_back(fp);
            continue;
        }
        line.finish();
        line.lo = line.entries.front().lambda;
        line.hi = line.entries.back().lambda;
        const Period1D p = detect_on_line(line, k, options);
        fp.period = p.period;
        out.fibers.push_back(fp);
        if (!p.period) {
            out.diagnostic = "fiber at offset " + fp.fiber + ": " + p.diagnostic;
            return out;
        }
        periods.push_back(*p.period);
    }
    if (periods.empty()) {
        out.diagnostic = "no fiber holds two support points";
        return out;
    }
    for (std::size_t i = 1; i < periods.size(); ++i) {
        if (!parallel(periods[i], periods[0])) {
            out.status = LinePeriodStatus::rejected;
            std::string classes;
            for (int cl : basis.classes_used(periods[0])) classes += " " + std::to_string(cl);
            classes += " vs";
            for (int cl : basis.classes_used(periods[i])) classes += " " + std::to_string(cl);
            out.diagnostic = "fiber periods " + periods[0].to_string() + " and " + periods[i].to_string() +
                             " are not parallel in group coordinates (independence classes" + classes +
                             "); no common period";
            return out;
        }
    }
    const GroupPoint w = periods[0].primitive();
    Integer combined = 1;
    for (const auto& p : periods) {
        Integer t;
        p.is_multiple_of(w, t);
        combined = lcm_of(combined, abs(t));
    }
    const GroupPoint p = combined * w;
    if (box_translation_test(c, probes, p)) {
        out.status = LinePeriodStatus::found;
        out.period = p;
    } else {
        out.status = LinePeriodStatus::rejected;
        out.diagnostic = "combined period " + p.to_string() + " fails on the probe box";
    }
    return out;
}

}  // namespace

bool translation_test(const PointCloud& s, const GroupPoint& p) {
    const Line line = line_from_cloud(s);
    return line_translation_test(line, p, s.basis().embed(p)[0]);
}

Period1D detect_period_1d(const PointCloud& s, const Rational& k, const PeriodOptions& options) {
    return detect_on_line(line_from_cloud(s), k, options);
}

LinePeriod line_annihilator_period(const Configuration& c, const LaurentPoly& f, const IntBox& probes,
                                   const PeriodOptions& options) {
    require_same_basis(f.basis(), c.basis(), "line_annihilator_period");
    if (probes.rank() != c.rank()) throw ContractError("line_annihilator_period: probe box rank does not match");
    const LineInfo info = line_info(f);
    switch (info.status) {
        case LineStatus::not_line: throw ContractError("line_annihilator_period: support of f is not a line");
        case LineStatus::group_line: return group_line_period(c, *info.direction, probes, options);
        case LineStatus::embedded_line:
        case LineStatus::undecidable_declared_independent: return embedded_line_period(c, f, info, probes, options);
    }
    return {};
}

}  // namespace aperiodic
