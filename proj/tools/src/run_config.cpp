#include "run_config.hpp"

#include "aperiodic/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace aperiodic::cli {

namespace {

using K = FlagKind;

std::vector<CommandSpec> build() {
    const FlagSpec config{"config", K::value, "", "configuration spec file"};
    const FlagSpec poly{"poly", K::value, "", "polynomial, e.g. \"(X^(1,-1)-1)*(X^(0,1)-1)\""};
    const FlagSpec probes{"probes", K::value, "", "probe box, e.g. 0..99,0..99"};
    const FlagSpec report{"report", K::value, "", "JSON report path (stdout when empty)"};
    std::vector<CommandSpec> out{
        {"gen",
         "write a point cloud file for an example set or the support of a configuration",
         {{"example", K::value, "", "example name (S1, S2, S3, fibonacci, two-lattice, punctured-grid, Z, 2Z)"},
          {"window", K::list, "", "window corners: lo_1 .. lo_d hi_1 .. hi_d"},
          config,
          {"box", K::value, "", "group box whose support points are written (with --config)"},
          {"out", K::value, "", "point cloud path (stdout when empty)"},
          report}},
        {"analyze",
         "Delone constants, class tests, patch counts, Lagarias and Meyer checks",
         {{"in", K::value, "", "point cloud file"},
          {"delone", K::toggle, "false", "packing and covering radius"},
          {"classes", K::toggle, "false", "FLC, Meyer and finite generation tests"},
          {"patches", K::value, "", "T values for N_S(T), e.g. 1..5 or 1,5/2"},
          {"lagarias", K::value, "", "T grid for the N_S(T) < T/(2R) trigger"},
          {"meyer-ht", K::value, "", "T values for the H_T pattern bound"},
          {"minkowski", K::value, "", "finite set F for S + F, e.g. \"(0);(1)\""},
          {"epsilon", K::value, "0", "Meyer closeness threshold (0: packing radius / 4)"},
          {"flc-radius", K::value, "0", "FLC difference radius (0: 2R)"},
          {"pitch", K::value, "0", "covering grid pitch in dimension >= 2 (0: automatic)"},
          report}},
        {"annihilate verify", "evaluate f c exactly on a probe box", {config, poly, probes, report}},
        {"annihilate find",
         "low-complexity periodizer search, composed with a difference polynomial",
         {config,
          {"shape", K::value, "", "shape D, e.g. \"(0,0);(1,0);(0,1);(1,1)\""},
          probes,
          {"certify", K::value, "", "box for certifying the composed annihilator (default: probes)"},
          {"max-norm", K::value, "4", "largest max-norm of the difference vector tried"},
          report}},
        {"annihilate dilate",
         "re-verify f(X^k) for admissible k",
         {config, poly, probes,
          {"k", K::value, "1..50", "values of k, e.g. 1..50 or 1,7,11"},
          {"s", K::value, "", "dilation bound override (default: max|a| * sum|f_v|)"},
          report}},
        {"annihilate special",
         "verify prod (X^{r(v-u)} - 1) for support points u",
         {config, poly, probes,
          {"u", K::value, "", "support point (default: every support point)"},
          {"r", K::value, "1", "dilation constant r"},
          report}},
        {"annihilate period",
         "period of a 1-D cloud, or of a configuration along a line annihilator",
         {{"in", K::value, "", "1-D point cloud file"},
          {"k", K::value, "", "anchor window length (1-D)"},
          config, poly, probes,
          {"min-repeats", K::value, "4", "copies of the period the window must span"},
          {"search-bound", K::value, "0", "cap on candidates (0: none)"},
          report}},
        {"decompose",
         "periodic decomposition c = c_1 + ... + c_m on a window",
         {config,
          {"directions", K::value, "", "directions, e.g. \"(1,-1);(0,1);(1,0)\""},
          {"window", K::value, "", "outer window box, e.g. -12..12,-12..12"},
          {"out", K::value, "", "witness JSON path (stdout when empty)"}}},
        {"forced",
         "Newton polygon vertex coverage for a polynomial family",
         {{"family", K::value, "", "file with one polynomial per line"},
          {"dim", K::value, "2", "dimension of the family"},
          {"samples", K::value, "2000", "random directions in dimension >= 3"},
          {"hyperplane", K::value, "", "directions v for the hyperplane condition"},
          report}},
        {"plot",
         "SVG and CSV figures",
         {{"kind", K::value, "", "ticks | cloud | newton | lagarias"},
          {"in", K::list, "", "point cloud file(s)"},
          {"family", K::value, "", "polynomial family file (newton)"},
          {"highlight", K::list, "", "patch circles index:radius (cloud)"},
          {"t-grid", K::value, "1..20", "T grid (lagarias)"},
          {"out", K::value, "", "output path (stdout when empty)"}}},
        {"selftest",
         "run the acceptance suite",
         {{"criteria", K::value, "", "comma-separated criterion ids (default: all)"}, report}},
    };
    for (auto& c : out) {
        c.flags.push_back({"precision-bits", K::value, default_precision_bits(), "bits for irrational surrogates"});
        c.flags.push_back({"seed", K::value, "1", "seed for randomized tests"});
    }
    return out;
}

}  // namespace

std::string default_precision_bits() {
    const char* env = std::getenv("APERIODIC_PRECISION_BITS");
    return env && *env ? std::string(env) : std::string("128");
}

const std::vector<CommandSpec>& commands() {
    static const std::vector<CommandSpec> all = build();
    return all;
}

const CommandSpec& command(const std::string& name) {
    for (const auto& c : commands()) {
        if (c.name == name) return c;
    }
    throw Error("unknown command '" + name + "'");
}

const std::string& RunConfig::str(const std::string& name) const {
    const auto it = flags.find(name);
    if (it == flags.end() || !it->second.is_string()) throw Error("run config has no value for --" + name);
    return it->second.get_ref<const std::string&>();
}

const std::vector<std::string> RunConfig::list(const std::string& name) const {
    const auto it = flags.find(name);
    if (it == flags.end() || !it->second.is_array()) throw Error("run config has no list for --" + name);
    return it->second.get<std::vector<std::string>>();
}

bool RunConfig::toggle(const std::string& name) const {
    const auto it = flags.find(name);
    return it != flags.end() && it->second.is_boolean() && it->second.get<bool>();
}

bool RunConfig::given(const std::string& name) const {
    const auto it = flags.find(name);
    if (it == flags.end()) return false;
    if (it->second.is_string()) return !it->second.get_ref<const std::string&>().empty();
    if (it->second.is_array()) return !it->second.empty();
    return it->second.is_boolean() && it->second.get<bool>();
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json flags_json = nlohmann::json::object();
    for (const auto& [k, v] : flags) flags_json[k] = v;
    return {{"command", command}, {"flags", flags_json}};
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error("run config must be a JSON object");
    for (const auto& [k, v] : j.items()) {
        if (k != "command" && k != "flags") throw Error("run config: unknown key '" + k + "'");
    }
    if (!j.contains("command") || !j["command"].is_string()) throw Error("run config: missing command");
    RunConfig rc;
    rc.command = j["command"].get<std::string>();
    const CommandSpec& spec = cli::command(rc.command);
    for (const auto& f : spec.flags) {
        if (f.kind == FlagKind::toggle) {
            rc.flags[f.name] = f.default_value == "true";
        } else if (f.kind == FlagKind::list) {
            rc.flags[f.name] = nlohmann::json::array();
        } else {
            rc.flags[f.name] = f.default_value;
        }
    }
    if (j.contains("flags")) {
        if (!j["flags"].is_object()) throw Error("run config: flags must be an object");
        for (const auto& [k, v] : j["flags"].items()) {
            const auto it = std::find_if(spec.flags.begin(), spec.flags.end(),
                                         [&](const FlagSpec& f) { return f.name == k; });
            if (it == spec.flags.end()) throw Error("run config: unknown key '" + k + "' for " + rc.command);
            const bool ok = (it->kind == FlagKind::toggle && v.is_boolean()) ||
                            (it->kind == FlagKind::value && v.is_string()) ||
                            (it->kind == FlagKind::list && v.is_array());
            if (!ok) throw Error("run config: wrong type for '" + k + "'");
            rc.flags[k] = v;
        }
    }
    return rc;
}

}  // namespace aperiodic::cli
