#include "commands.hpp"

#include "acceptance.hpp"
#include "aperiodic/annihilator.hpp"
#include "aperiodic/decomposition.hpp"
#include "aperiodic/delone.hpp"
#include "aperiodic/error.hpp"
#include "aperiodic/examples.hpp"
#include "aperiodic/forced.hpp"
#include "aperiodic/io.hpp"
#include "aperiodic/period.hpp"
#include "aperiodic/plot.hpp"
#include "aperiodic/poly_text.hpp"

#include <ctime>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

namespace aperiodic::cli {

namespace {

using nlohmann::json;

json js(const Rational& q) { return to_string(q); }
json js(const Integer& z) { return to_string(z); }
json js(const GroupPoint& p) { return p.to_string(); }

json js(const RationalVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(js(x));
    return a;
}

template <class T>
json js_list(const std::vector<T>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(js(x));
    return a;
}

json js(const Interval& i) { return {{"lower", js(i.lower)}, {"upper", js(i.upper)}}; }

const std::string& need(const RunConfig& rc, const std::string& name) {
    if (!rc.given(name)) throw ContractError(rc.command + ": --" + name + " is required");
    return rc.str(name);
}

long to_long(const std::string& text, const std::string& what) {
    const Integer z = parse_integer(text);
    if (!z.fits_slong_p()) throw ContractError(what + " is out of range");
    return z.get_si();
}

/// "1..5" or "1,5/2,7..9": rationals and inclusive integer ranges.
std::vector<Rational> parse_values(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_rational(item));
            continue;
        }
        const Integer lo = parse_integer(item.substr(0, dots));
        const Integer hi = parse_integer(item.substr(dots + 2));
        if (hi - lo > 1000000) throw ContractError("range " + item + " is too long");
        for (Integer x = lo; x <= hi; ++x) out.push_back(Rational(x));
    }
    if (out.empty()) throw ContractError("empty value list '" + text + "'");
    return out;
}

struct LoadedConfig {
    ConfigSpec spec;
    Configuration config;
};

LoadedConfig load_config(const RunConfig& rc) {
    ConfigSpec spec = parse_config_spec(read_text_file(need(rc, "config")));
    Configuration c = build_configuration(spec);
    return {std::move(spec), std::move(c)};
}

PointCloud load_cloud(const std::string& path) { return parse_point_cloud(read_text_file(path)); }

LaurentPoly load_poly(const RunConfig& rc, const Configuration& c) { return parse_poly(need(rc, "poly"), c.basis()); }

std::vector<LaurentPoly> load_family(const std::string& path) {
    std::vector<LaurentPoly> out;
    std::stringstream ss(read_text_file(path));
    std::string line;
    std::size_t n = 0;
    while (std::getline(ss, line)) {
        ++n;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        try {
            out.push_back(parse_poly(line));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), n, e.column());
        }
    }
    if (out.empty()) throw ContractError("family file " + path + " has no polynomials");
    return out;
}

json certificate_json(const AnnihilationCertificate& c) {
    json j{{"poly", print_poly(c.poly)},
           {"config_kind", c.config_kind},
           {"probes", c.probes},
           {"max_residual", js(c.max_residual)},
           {"verified", c.verified}};
    if (c.witness) j["witness"] = {{"point", js(*c.witness)}, {"residual", js(c.witness_residual)}};
    return j;
}

json inputs_json(const LoadedConfig& lc) { return {{"config", print_config_spec(lc.spec)}}; }

json delone_json(const DeloneReport& d) {
    return {{"min_distance_sq", js(d.min_distance_sq)},
            {"packing_radius", js(d.packing_radius)},
            {"covering_radius", js(d.covering_radius)},
            {"margin", js(d.margin)},
            {"grid_pitch", js(d.grid_pitch)},
            {"closest_pair", {js(d.closest_pair.first), js(d.closest_pair.second)}},
            {"deepest_hole", js(d.deepest_hole)},
            {"uniformly_discrete", d.uniformly_discrete},
            {"relatively_dense_in_window", d.relatively_dense_in_window}};
}

std::string class_label(Verdict v, const std::string& name) {
    switch (v) {
        case Verdict::consistent: return name;
        case Verdict::fails: return "not-" + name;
        case Verdict::inconclusive: break;
    }
    return "inconclusive";
}

json classes_json(const ClassReport& c) {
    json j{{"constants", delone_json(c.constants)},
           {"flc_radius", js(c.flc_radius)},
           {"flc_inner", c.flc_inner},
           {"flc_outer", c.flc_outer},
           {"flc", class_label(c.flc, "flc")},
           {"epsilon", js(c.epsilon)},
           {"meyer", class_label(c.meyer, "meyer")},
           {"difference_rank", c.difference_rank},
           {"finitely_generated", c.finitely_generated}};
    if (c.flc_witness) j["flc_witness"] = js(*c.flc_witness);
    if (c.meyer_witness) {
        j["meyer_witness"] = {js(c.meyer_witness->first), js(c.meyer_witness->second)};
        j["meyer_witness_distance_sq"] = js(c.meyer_witness_distance_sq);
    }
    return j;
}

DeloneOptions delone_options(const RunConfig& rc) {
    DeloneOptions o;
    o.grid_pitch = parse_rational(rc.str("pitch"));
    return o;
}

Outcome cmd_gen(const RunConfig& rc) {
    Outcome o;
    std::optional<PointCloud> cloud;
    if (rc.given("example")) {
        const auto w = rc.list("window");
        if (w.empty() || w.size() % 2 != 0) throw ContractError("gen: --window needs lo_1 .. lo_d hi_1 .. hi_d");
        RationalBox box;
        for (std::size_t i = 0; i < w.size() / 2; ++i) {
            box.lower.push_back(parse_rational(w[i]));
            box.upper.push_back(parse_rational(w[i + w.size() / 2]));
        }
        cloud = example_cloud(rc.str("example"), box);
        o.result["source"] = {{"example", rc.str("example")}, {"window", box.to_string()}};
    } else if (rc.given("config")) {
        const LoadedConfig lc = load_config(rc);
        const IntBox box = IntBox::parse(need(rc, "box"));
        if (box.rank() != lc.config.rank()) throw ContractError("gen: --box rank does not match the configuration");
        std::vector<GroupPoint> pts;
        std::vector<Rational> colors;
        RationalBox window;
        bool first = true;
        // The embedded image of the box lies in the bounding box of its embedded corners.
        const std::size_t corners = std::size_t{1} << box.rank();
        for (std::size_t m = 0; m < corners; ++m) {
            GroupPoint corner = GroupPoint::zero(box.rank());
            std::vector<Integer> coords;
            for (std::size_t i = 0; i < box.rank(); ++i) coords.push_back((m >> i) & 1 ? box.upper[i] : box.lower[i]);
            const RationalVector x = lc.config.basis().embed(GroupPoint(coords));
            if (first) {
                window = {x, x};
                first = false;
            }
            for (std::size_t i = 0; i < x.size(); ++i) {
                window.lower[i] = std::min(window.lower[i], x[i]);
                window.upper[i] = std::max(window.upper[i], x[i]);
            }
        }
        box.for_each([&](const GroupPoint& u) {
            if (!lc.config.in_domain(u)) return;
            const Rational v = lc.config.eval(u);
            if (v == 0) return;
            pts.push_back(u);
            colors.push_back(v);
        });
        cloud = PointCloud(lc.config.basis(), pts, window, colors);
        o.result["source"] = {{"config", print_config_spec(lc.spec)}, {"box", box.to_string()}};
    } else {
        throw ContractError("gen: give --example or --config");
    }
    const std::string text = print_point_cloud(*cloud);
    if (rc.given("out")) {
        write_text_file(rc.str("out"), text);
        o.summary.push_back("wrote " + std::to_string(cloud->size()) + " points to " + rc.str("out"));
    } else {
        std::cout << text;
    }
    o.result["points"] = cloud->size();
    o.result["dim"] = cloud->dim();
    o.result["rank"] = cloud->basis().rank();
    return o;
}

Outcome cmd_analyze(const RunConfig& rc) {
    Outcome o;
    const PointCloud s = load_cloud(need(rc, "in"));
    const DeloneOptions dopt = delone_options(rc);
    const bool any = rc.toggle("delone") || rc.toggle("classes") || rc.given("patches") || rc.given("lagarias") ||
                     rc.given("meyer-ht") || rc.given("minkowski");
    o.result["points"] = s.size();
    o.result["window"] = s.window().to_string();
    bool negative = false;
    if (rc.toggle("delone") || !any) {
        const DeloneReport d = delone_constants(s, dopt);
        o.result["delone"] = delone_json(d);
        o.summary.push_back("packing radius " + to_string(d.packing_radius.lower) + ", covering radius in [" +
                            to_string(d.covering_radius.lower) + ", " + to_string(d.covering_radius.upper) + "]");
    }
    ClassOptions copt;
    copt.epsilon = parse_rational(rc.str("epsilon"));
    copt.flc_radius = parse_rational(rc.str("flc-radius"));
    copt.delone = dopt;
    if (rc.toggle("classes") || !any) {
        const ClassReport c = class_tests(s, copt);
        o.result["classes"] = classes_json(c);
        std::string meyer = "meyer: " + class_label(c.meyer, "meyer");
        if (c.meyer_witness) {
            meyer += " with witness " + c.meyer_witness->first.to_string() + ", " + c.meyer_witness->second.to_string();
        }
        std::string flc = "flc: " + class_label(c.flc, "flc");
        if (c.flc_witness) flc += " with witness " + c.flc_witness->to_string();
        o.summary.push_back(flc);
        o.summary.push_back(meyer);
        o.summary.push_back("difference rank " + std::to_string(c.difference_rank));
        negative = negative || (c.flc == Verdict::fails && c.flc_witness) || (c.meyer == Verdict::fails && c.meyer_witness);
    }
    if (rc.given("patches")) {
        json a = json::array();
        for (const auto& t : parse_values(rc.str("patches"))) {
            const PatchCount p = patch_count(s, t);
            a.push_back({{"t", js(t)}, {"count", p.count}, {"centers", p.centers},
                         {"window_lower_bound", p.window_lower_bound}});
            o.summary.push_back("N(" + to_string(t) + ") = " + std::to_string(p.count));
        }
        o.result["patches"] = a;
    }
    if (rc.given("lagarias")) {
        const LagariasReport l = lagarias_test(s, parse_values(rc.str("lagarias")), dopt);
        json curve = json::array();
        for (const auto& p : l.curve) curve.push_back({{"t", js(p.t)}, {"n", p.n}, {"triggered", p.triggered}});
        o.result["lagarias"] = {{"covering_upper", js(l.covering_upper)}, {"curve", curve}};
        if (l.trigger) o.result["lagarias"]["trigger"] = js(*l.trigger);
        o.summary.push_back("lagarias trigger: " + (l.trigger ? "T = " + to_string(*l.trigger) : std::string("none")));
    }
    if (rc.given("meyer-ht")) {
        json a = json::array();
        for (const auto& t : parse_values(rc.str("meyer-ht"))) {
            const MeyerHTReport m = meyer_ht(s, t, dopt);
            a.push_back({{"t", js(t)},
                         {"origin", js(m.origin)},
                         {"covering_upper", js(m.covering_upper)},
                         {"u", js_list(m.u)},
                         {"h_t_size", m.h_t.size()},
                         {"lhs", m.lhs},
                         {"rhs", m.rhs},
                         {"n_t_plus_r", m.n_t_plus_r},
                         {"holds", m.holds}});
            o.summary.push_back("H_" + to_string(t) + ": " + std::to_string(m.lhs) + " <= " + std::to_string(m.rhs) +
                                (m.holds ? "" : " FAILS"));
            negative = negative || !m.holds;
        }
        o.result["meyer_ht"] = a;
    }
    if (rc.given("minkowski")) {
        const MinkowskiReport m = minkowski_flc(s, parse_point_list(rc.str("minkowski")), copt);
        json j{{"points", m.sum.size()},
               {"min_distance_sq_inner", js(m.min_distance_sq_inner)},
               {"min_distance_sq_outer", js(m.min_distance_sq_outer)},
               {"uniformly_discrete", to_string(m.uniformly_discrete)}};
        if (m.witness) j["witness"] = {js(m.witness->first), js(m.witness->second)};
        if (m.uniformly_discrete == Verdict::consistent) j["classes"] = classes_json(m.classes);
        o.result["minkowski"] = j;
        o.summary.push_back("S + F uniform discreteness: " + to_string(m.uniformly_discrete));
        negative = negative || (m.uniformly_discrete == Verdict::fails && m.witness);
    }
    if (negative) {
        o.verdict = "negative";
        o.exit_code = exit_negative;
    }
    return o;
}

Outcome cmd_verify(const RunConfig& rc) {
    Outcome o;
    const LoadedConfig lc = load_config(rc);
    const LaurentPoly f = load_poly(rc, lc.config);
    const AnnihilationCertificate c = verify_annihilator(f, lc.config, IntBox::parse(need(rc, "probes")));
    o.result = {{"operation", "verify"}, {"inputs", inputs_json(lc)}, {"certificate", certificate_json(c)}};
    o.summary.push_back(std::string(c.verified ? "verified" : "not verified") + " on " + std::to_string(c.probes) +
                        " probes, max residual " + to_string(c.max_residual));
    if (c.witness) o.summary.push_back("witness " + c.witness->to_string() + " residual " + to_string(c.witness_residual));
    if (!c.verified) {
        o.verdict = "not-annihilated";
        o.exit_code = exit_negative;
    }
    return o;
}

Outcome cmd_find(const RunConfig& rc) {
    Outcome o;
    const LoadedConfig lc = load_config(rc);
    const Shape d(parse_point_list(need(rc, "shape")));
    const IntBox probes = IntBox::parse(need(rc, "probes"));
    const IntBox certify = rc.given("certify") ? IntBox::parse(rc.str("certify")) : probes;
    const PeriodizerSearch s = find_periodizer(lc.config, d, probes.points());
    json kernel = json::array();
    for (const auto& k : s.kernel) kernel.push_back(js(k));
    o.result = {{"operation", "find"},
                {"inputs", inputs_json(lc)},
                {"probes", s.probes},
                {"distinct_rows", s.distinct_rows},
                {"kernel", kernel}};
    if (!s.candidate) {
        o.summary.push_back("no periodizer candidate (" + std::to_string(s.distinct_rows) + " distinct rows)");
        o.verdict = "no-candidate";
        o.exit_code = exit_negative;
        return o;
    }
    o.result["candidate"] = print_poly(*s.candidate);
    o.summary.push_back("candidate " + print_poly(*s.candidate));
    const auto composed = compose_annihilator(lc.config, *s.candidate, certify, to_long(rc.str("max-norm"), "--max-norm"));
    if (!composed) {
        o.summary.push_back("no difference polynomial certifies on " + certify.to_string());
        o.verdict = "not-certified";
        o.exit_code = exit_negative;
        return o;
    }
    if (composed->v) o.result["difference_vector"] = js(*composed->v);
    o.result["certificate"] = certificate_json(composed->certificate);
    o.summary.push_back("certified " + print_poly(composed->certificate.poly) + " on " +
                        std::to_string(composed->certificate.probes) + " probes");
    return o;
}

Outcome cmd_dilate(const RunConfig& rc) {
    Outcome o;
    const LoadedConfig lc = load_config(rc);
    const LaurentPoly f = load_poly(rc, lc.config);
    Integer s;
    if (rc.given("s")) {
        s = parse_integer(rc.str("s"));
    } else {
        if (!lc.config.alphabet()) throw ContractError("annihilate dilate: the configuration has no alphabet; add one or pass --s");
        s = dilation_bound(f, *lc.config.alphabet());
    }
    std::vector<Integer> ks;
    for (const auto& k : parse_values(rc.str("k"))) {
        if (!is_integer(k)) throw ContractError("annihilate dilate: k must be an integer");
        ks.push_back(k.get_num());
    }
    const DilationWitness w = check_dilation(f, lc.config, s, ks, IntBox::parse(need(rc, "probes")));
    o.result = {{"operation", "dilate"},
                {"inputs", inputs_json(lc)},
                {"poly", print_poly(f)},
                {"s", js(w.s)},
                {"tested_k", js_list(w.tested_k)},
                {"failed_k", js_list(w.failed_k)},
                {"out_of_contract_k", js_list(w.out_of_contract_k)},
                {"out_of_contract_pass", js_list(w.out_of_contract_pass)},
                {"all_pass", w.all_pass}};
    o.summary.push_back("s = " + to_string(s) + ": " + std::to_string(w.tested_k.size()) + " admissible k, " +
                        std::to_string(w.failed_k.size()) + " failures");
    if (!w.all_pass) {
        o.verdict = "dilation-failed";
        o.exit_code = exit_negative;
    }
    return o;
}

Outcome cmd_special(const RunConfig& rc) {
    Outcome o;
    const LoadedConfig lc = load_config(rc);
    const LaurentPoly f = load_poly(rc, lc.config);
    const Integer r = parse_integer(rc.str("r"));
    const IntBox probes = IntBox::parse(need(rc, "probes"));
    std::vector<GroupPoint> us;
    if (rc.given("u")) {
        us = parse_point_list(rc.str("u"));
    } else {
        us = f.support();
    }
    json a = json::array();
    std::size_t ok = 0;
    for (const auto& u : us) {
        const AnnihilationCertificate c = verify_annihilator(special_annihilator(f, u, r), lc.config, probes);
        if (c.verified) ++ok;
        a.push_back({{"u", js(u)}, {"certificate", certificate_json(c)}});
    }
    o.result = {{"operation", "special"}, {"inputs", inputs_json(lc)}, {"poly", print_poly(f)}, {"r", js(r)}, {"results", a}};
    o.summary.push_back(std::to_string(ok) + "/" + std::to_string(us.size()) + " special annihilators verified");
    if (ok != us.size()) {
        o.verdict = "not-annihilated";
        o.exit_code = exit_negative;
    }
    return o;
}

Outcome cmd_period(const RunConfig& rc) {
    Outcome o;
    PeriodOptions opt;
    opt.min_period_repeats = static_cast<unsigned>(to_long(rc.str("min-repeats"), "--min-repeats"));
    opt.search_bound = to_long(rc.str("search-bound"), "--search-bound");
    if (rc.given("in")) {
        const PointCloud s = load_cloud(rc.str("in"));
        const Period1D p = detect_period_1d(s, parse_rational(need(rc, "k")), opt);
        o.result = {{"operation", "period"},
                    {"mode", "1d"},
                    {"anchors", p.anchors},
                    {"candidates_tested", p.candidates_tested},
                    {"bound",
                     {{"alphabet_size", p.bound.alphabet_size},
                      {"local_differences", p.bound.local_differences},
                      {"exponent", js(p.bound.exponent)}}}};
        if (p.period) {
            o.result["period"] = js(*p.period);
            o.result["length"] = js(p.length);
            o.summary.push_back("period " + p.period->to_string() + " (length " + to_string(p.length) + ")");
        } else {
            o.result["diagnostic"] = p.diagnostic;
            o.summary.push_back("no period: " + p.diagnostic);
            o.verdict = "no-period";
            o.exit_code = exit_negative;
        }
        return o;
    }
    const LoadedConfig lc = load_config(rc);
    const LaurentPoly f = load_poly(rc, lc.config);
    const LinePeriod p = line_annihilator_period(lc.config, f, IntBox::parse(need(rc, "probes")), opt);
    json fibers = json::array();
    for (const auto& fb : p.fibers) {
        json j{{"fiber", fb.fiber}, {"points", fb.points}};
        if (fb.period) j["period"] = js(*fb.period);
        fibers.push_back(j);
    }
    o.result = {{"operation", "period"},
                {"mode", "line"},
                {"inputs", inputs_json(lc)},
                {"poly", print_poly(f)},
                {"status", to_string(p.status)},
                {"line", to_string(p.line)},
                {"fibers", fibers},
                {"diagnostic", p.diagnostic}};
    if (p.period) o.result["period"] = js(*p.period);
    o.summary.push_back(to_string(p.status) + (p.period ? " period " + p.period->to_string() : std::string()) +
                        (p.diagnostic.empty() ? "" : ": " + p.diagnostic));
    if (p.status != LinePeriodStatus::found) {
        o.verdict = to_string(p.status);
        o.exit_code = p.status == LinePeriodStatus::rejected ? exit_negative : exit_ok;
    }
    return o;
}

json window_function_json(const WindowFunction& w) {
    json values = json::array();
    w.box().for_each([&](const GroupPoint& u) { values.push_back(w.defined(u) ? js(w.at(u)) : json(nullptr)); });
    return {{"box", w.box().to_string()}, {"values", values}};
}

Outcome cmd_decompose(const RunConfig& rc) {
    Outcome o;
    o.report_flag = "out";
    const LoadedConfig lc = load_config(rc);
    const std::vector<GroupPoint> dirs = parse_point_list(need(rc, "directions"));
    const DecompositionWitness w = decompose(lc.config, dirs, IntBox::parse(need(rc, "window")));
    json comps = json::array();
    for (const auto& c : w.components) {
        json j = window_function_json(c.values);
        j["direction"] = js(c.direction);
        comps.push_back(j);
    }
    o.result = {{"operation", "decompose"},
                {"inputs", inputs_json(lc)},
                {"outer_window", w.outer_window.to_string()},
                {"margin", js_list(w.margin)},
                {"certified", w.certified},
                {"components", comps}};
    // Values are listed over each component's box in lexicographic order.
    if (w.inner_window) o.result["inner_window"] = w.inner_window->to_string();
    if (!w.diagnostic.empty()) o.result["diagnostic"] = w.diagnostic;
    o.summary.push_back(std::string(w.certified ? "certified" : "not certified") + " with " +
                        std::to_string(w.components.size()) + " components" +
                        (w.inner_window ? " on " + w.inner_window->to_string() : std::string()) +
                        (w.diagnostic.empty() ? "" : ": " + w.diagnostic));
    if (!w.certified) {
        o.verdict = "not-certified";
        o.exit_code = exit_negative;
    }
    return o;
}

json directions_json(const std::vector<IntDirection>& dirs) {
    json a = json::array();
    for (const auto& d : dirs) a.push_back(js_list(d));
    return a;
}

Outcome cmd_forced(const RunConfig& rc) {
    Outcome o;
    const std::vector<LaurentPoly> family = load_family(need(rc, "family"));
    const long dim = to_long(rc.str("dim"), "--dim");
    for (const auto& f : family) {
        if (static_cast<long>(f.basis().dim()) != dim) {
            throw ContractError("forced: " + print_poly(f) + " has dimension " + std::to_string(f.basis().dim()) +
                                ", expected " + std::to_string(dim));
        }
    }
    CoverageOptions opt;
    opt.samples = static_cast<std::size_t>(to_long(rc.str("samples"), "--samples"));
    opt.seed = static_cast<std::uint64_t>(to_long(rc.str("seed"), "--seed"));
    const CoverageReport r = vertex_coverage(family, opt);
    json polys = json::array();
    for (const auto& f : family) polys.push_back(print_poly(f));
    json polygons = json::array();
    for (const auto& p : r.polygons) {
        json verts = json::array();
        for (const auto& v : p.vertices) verts.push_back(js(v));
        polygons.push_back({{"vertices", verts}, {"normals", directions_json(p.normals)}});
    }
    o.result = {{"family", polys},
                {"dim", r.dim},
                {"method", to_string(r.method)},
                {"polygons", polygons},
                {"uncovered", directions_json(r.uncovered)},
                {"directions_tested", r.directions_tested},
                {"conclusion", to_string(r.conclusion)}};
    o.summary.push_back(to_string(r.conclusion) + ", " + std::to_string(r.uncovered.size()) + " uncovered directions");
    if (rc.given("hyperplane")) {
        std::vector<RationalVector> dirs;
        for (const auto& p : parse_point_list(rc.str("hyperplane"))) {
            RationalVector v;
            for (const auto& x : p.coords()) v.push_back(Rational(x));
            dirs.push_back(v);
        }
        json h = json::array();
        for (const auto& f : family) {
            json per = json::array();
            for (const auto& v : hyperplane_condition(f, dirs)) {
                json j{{"direction", js(v.direction)}, {"holds", v.holds}};
                if (v.witness) j["witness"] = js(*v.witness);
                per.push_back(j);
            }
            h.push_back({{"poly", print_poly(f)}, {"verdicts", per}});
        }
        o.result["hyperplane"] = h;
    }
    if (r.conclusion == CoverageConclusion::gaps_listed) {
        o.verdict = to_string(r.conclusion);
        o.exit_code = exit_negative;
    }
    return o;
}

Outcome cmd_plot(const RunConfig& rc) {
    Outcome o;
    o.report_flag.clear();
    const std::string kind = need(rc, "kind");
    const auto inputs = rc.list("in");
    std::string text;
    if (kind == "ticks") {
        if (inputs.empty()) throw ContractError("plot ticks: give at least one --in");
        std::vector<std::pair<std::string, PointCloud>> rows;
        for (const auto& path : inputs) rows.emplace_back(std::filesystem::path(path).stem().string(), load_cloud(path));
        text = svg_tick_rows(rows);
    } else if (kind == "cloud") {
        if (inputs.size() != 1) throw ContractError("plot cloud: give exactly one --in");
        std::vector<PatchHighlight> hl;
        for (const auto& h : rc.list("highlight")) {
            const auto colon = h.find(':');
            if (colon == std::string::npos) throw ContractError("plot cloud: --highlight expects index:radius");
            hl.push_back({static_cast<std::size_t>(to_long(h.substr(0, colon), "highlight index")),
                          parse_rational(h.substr(colon + 1))});
        }
        text = svg_cloud_2d(load_cloud(inputs.front()), hl);
    } else if (kind == "newton") {
        std::vector<NewtonPolygon> polys;
        for (const auto& f : load_family(need(rc, "family"))) polys.push_back(newton_polygon(f));
        text = svg_newton_polygons(polys);
    } else if (kind == "lagarias") {
        if (inputs.size() != 1) throw ContractError("plot lagarias: give exactly one --in");
        text = lagarias_csv(lagarias_test(load_cloud(inputs.front()), parse_values(rc.str("t-grid"))));
    } else {
        throw ContractError("plot: unknown --kind '" + kind + "'");
    }
    if (rc.given("out")) {
        write_text_file(rc.str("out"), text);
        o.summary.push_back("wrote " + rc.str("out"));
    } else {
        std::cout << text;
    }
    return o;
}

Outcome cmd_selftest(const RunConfig& rc) {
    Outcome o;
    std::vector<int> ids;
    if (rc.given("criteria")) {
        for (const auto& v : parse_values(rc.str("criteria"))) ids.push_back(static_cast<int>(Integer(v.get_num()).get_si()));
    }
    json a = json::array();
    bool all = true;
    acceptance::run(ids, [&](const acceptance::CriterionResult& r) {
        std::cout << acceptance::format(r) << std::endl;
        all = all && r.pass;
        a.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    });
    o.result["criteria"] = a;
    if (!all) {
        o.verdict = "acceptance-failed";
        o.exit_code = exit_negative;
    }
    return o;
}

const std::map<std::string, std::function<Outcome(const RunConfig&)>>& handlers() {
    static const std::map<std::string, std::function<Outcome(const RunConfig&)>> h{
        {"gen", cmd_gen},
        {"analyze", cmd_analyze},
        {"annihilate verify", cmd_verify},
        {"annihilate find", cmd_find},
        {"annihilate dilate", cmd_dilate},
        {"annihilate special", cmd_special},
        {"annihilate period", cmd_period},
        {"decompose", cmd_decompose},
        {"forced", cmd_forced},
        {"plot", cmd_plot},
        {"selftest", cmd_selftest},
    };
    return h;
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

json envelope(const RunConfig& rc, const Outcome& o) {
    return {{"tool", "aperiodic"},
            {"version", APERIODIC_VERSION},
            {"run_config", rc.to_json()},
            {"precision_bits", precision_bits()},
            {"verdict", o.verdict},
            {"result", o.result},
            {"timestamp", utc_timestamp()}};
}

int execute(const RunConfig& rc) {
    const auto it = handlers().find(rc.command);
    if (it == handlers().end()) throw Error("unknown command '" + rc.command + "'");
    const long bits = to_long(rc.str("precision-bits"), "--precision-bits");
    if (bits < 16) throw ContractError("--precision-bits must be at least 16");
    set_precision_bits(static_cast<unsigned>(bits));
    const Outcome o = it->second(rc);
    for (const auto& line : o.summary) std::cout << line << "\n";
    if (!o.report_flag.empty()) {
        const std::string text = envelope(rc, o).dump(2) + "\n";
        if (rc.given(o.report_flag)) {
            write_text_file(rc.str(o.report_flag), text);
        } else if (rc.command != "gen" && rc.command != "selftest") {
            std::cout << text;
        }
    }
    std::cout.flush();
    return o.exit_code;
}

}  // namespace aperiodic::cli
