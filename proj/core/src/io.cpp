#include "aperiodic/io.hpp"

#include "aperiodic/error.hpp"
#include "aperiodic/examples.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace aperiodic {

namespace {

struct Token {
    std::string text;
    std::size_t col = 0;
};

struct Line {
    std::size_t number = 0;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string_view raw = text.substr(pos, end - pos);
        ++number;
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            if (i >= raw.size() || raw[i] == '#') break;
            const std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

[[noreturn]] void fail(const Line& line, std::size_t token, const std::string& what) {
    const std::size_t col = token < line.tokens.size() ? line.tokens[token].col
                                                       : line.tokens.back().col + line.tokens.back().text.size();
    throw ParseError(what, line.number, col);
}

Rational rational_at(const Line& line, std::size_t i) {
    if (i >= line.tokens.size()) fail(line, i, "missing value");
    try {
        return parse_rational(line.tokens[i].text);
    } catch (const ContractError&) {
        fail(line, i, "bad rational '" + line.tokens[i].text + "'");
    }
}

Integer integer_at(const Line& line, std::size_t i) {
    if (i >= line.tokens.size()) fail(line, i, "missing integer");
    try {
        return parse_integer(line.tokens[i].text);
    } catch (const ContractError&) {
        fail(line, i, "bad integer '" + line.tokens[i].text + "'");
    }
}

std::size_t count_at(const Line& line, std::size_t i) {
    const Integer v = integer_at(line, i);
    if (v < 0 || v > 1000000) fail(line, i, "count out of range");
    return v.get_ui();
}

void expect_size(const Line& line, std::size_t n) {
    if (line.tokens.size() != n) {
        fail(line, std::min(line.tokens.size(), n), "expected " + std::to_string(n - 1) + " fields after '" +
                                                        line.tokens[0].text + "'");
    }
}

GroupPoint group_point_at(const Line& line, std::size_t first, std::size_t rank) {
    std::vector<Integer> coords;
    for (std::size_t i = 0; i < rank; ++i) coords.push_back(integer_at(line, first + i));
    return GroupPoint(std::move(coords));
}

void check_header(const std::vector<Line>& lines, const std::string& magic) {
    if (lines.empty()) throw ParseError("empty input", 1, 1);
    const Line& h = lines.front();
    if (h.tokens[0].text != magic) fail(h, 0, "expected '" + magic + " 1'");
    if (h.tokens.size() != 2 || h.tokens[1].text != "1") fail(h, 1, "unsupported version");
}

// Parses basis/gen records starting at lines[i]; advances i past them.
ExponentBasis parse_basis(const std::vector<Line>& lines, std::size_t& i) {
    const Line& b = lines[i];
    expect_size(b, 3);
    const std::size_t rank = count_at(b, 1);
    const std::size_t dim = count_at(b, 2);
    if (rank == 0 || dim == 0) fail(b, 1, "rank and dimension must be positive");
    ++i;
    std::vector<RationalVector> gens;
    std::vector<int> classes;
    std::vector<std::string> labels;
    for (std::size_t g = 0; g < rank; ++g, ++i) {
        if (i >= lines.size() || lines[i].tokens[0].text != "gen") {
            throw ParseError("expected " + std::to_string(rank) + " gen lines", i < lines.size() ? lines[i].number : b.number, 1);
        }
        const Line& l = lines[i];
        if (l.tokens.size() != dim + 2 && l.tokens.size() != dim + 3) fail(l, l.tokens.size(), "gen needs a class and " + std::to_string(dim) + " coordinates");
        const Integer cls = integer_at(l, 1);
        classes.push_back(static_cast<int>(cls.get_si()));
        RationalVector v;
        for (std::size_t k = 0; k < dim; ++k) v.push_back(rational_at(l, 2 + k));
        gens.push_back(std::move(v));
        labels.push_back(l.tokens.size() == dim + 3 ? l.tokens.back().text : std::string());
    }
    try {
        return ExponentBasis::make(std::move(gens), std::move(classes), std::move(labels));
    } catch (const ContractError& e) {
        fail(b, 0, e.what());
    }
}

std::string print_basis(const ExponentBasis& b) {
    std::ostringstream out;
    out << "basis " << b.rank() << ' ' << b.dim() << '\n';
    for (std::size_t i = 0; i < b.rank(); ++i) {
        out << "gen " << b.class_of(i);
        for (const auto& x : b.generator(i)) out << ' ' << to_string(x);
        if (!b.label(i).empty()) out << ' ' << b.label(i);
        out << '\n';
    }
    return out.str();
}

RationalBox window_at(const Line& l, std::size_t dim) {
    expect_size(l, 2 * dim + 1);
    RationalBox w;
    for (std::size_t k = 0; k < dim; ++k) w.lower.push_back(rational_at(l, 1 + k));
    for (std::size_t k = 0; k < dim; ++k) w.upper.push_back(rational_at(l, 1 + dim + k));
    for (std::size_t k = 0; k < dim; ++k) {
        if (w.lower[k] > w.upper[k]) fail(l, 1 + k, "window lower corner exceeds upper corner");
    }
    return w;
}

std::string print_window(const RationalBox& w) {
    std::string out = "window";
    for (const auto& x : w.lower) out += " " + to_string(x);
    for (const auto& x : w.upper) out += " " + to_string(x);
    return out + "\n";
}

std::pair<GroupPoint, Rational> point_record(const Line& l, std::size_t rank) {
    if (l.tokens.size() != rank + 1 && l.tokens.size() != rank + 2) {
        fail(l, l.tokens.size(), "point needs " + std::to_string(rank) + " coordinates and an optional color");
    }
    GroupPoint p = group_point_at(l, 1, rank);
    Rational color = l.tokens.size() == rank + 2 ? rational_at(l, rank + 1) : Rational(1);
    return {std::move(p), std::move(color)};
}

std::string print_point(const GroupPoint& p, const Rational& color, bool with_color) {
    std::string out = "point";
    for (const auto& x : p.coords()) out += " " + to_string(x);
    if (with_color) out += " " + to_string(color);
    return out + "\n";
}

}  // namespace

std::string print_point_cloud(const PointCloud& s) {
    std::string out = "aperiodic-pointcloud 1\n" + print_basis(s.basis()) + print_window(s.window());
    const bool colored = !s.uncolored();
    for (std::size_t i = 0; i < s.size(); ++i) out += print_point(s.points()[i], s.colors()[i], colored);
    return out;
}

PointCloud parse_point_cloud(std::string_view text) {
    const auto lines = tokenize(text);
    check_header(lines, "aperiodic-pointcloud");
    std::size_t i = 1;
    if (i >= lines.size() || lines[i].tokens[0].text != "basis") {
        throw ParseError("expected a basis line", i < lines.size() ? lines[i].number : lines[0].number + 1, 1);
    }
    const ExponentBasis basis = parse_basis(lines, i);
    if (i >= lines.size() || lines[i].tokens[0].text != "window") {
        throw ParseError("expected a window line", i < lines.size() ? lines[i].number : lines.back().number + 1, 1);
    }
    const RationalBox window = window_at(lines[i], basis.dim());
    ++i;
    std::vector<GroupPoint> points;
    std::vector<Rational> colors;
    for (; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens[0].text != "point") fail(l, 0, "unknown record '" + l.tokens[0].text + "'");
        auto [p, c] = point_record(l, basis.rank());
        points.push_back(std::move(p));
        colors.push_back(std::move(c));
    }
    try {
        return PointCloud(basis, std::move(points), window, std::move(colors));
    } catch (const ContractError& e) {
        throw ParseError(e.what(), lines.back().number, 1);
    }
}

ConfigSpec parse_config_spec(std::string_view text) {
    const auto lines = tokenize(text);
    check_header(lines, "aperiodic-config");
    ConfigSpec spec;
    bool have_basis = false;
    for (std::size_t i = 1; i < lines.size();) {
        const Line& l = lines[i];
        const std::string& key = l.tokens[0].text;
        if (key == "basis") {
            if (have_basis) fail(l, 0, "basis given twice");
            spec.basis = parse_basis(lines, i);
            have_basis = true;
            continue;
        }
        if (key == "kind") {
            expect_size(l, 2);
            spec.kind = l.tokens[1].text;
        } else if (key == "rank") {
            if (have_basis) fail(l, 0, "basis given twice");
            expect_size(l, 2);
            const std::size_t m = count_at(l, 1);
            if (m == 0) fail(l, 1, "rank must be positive");
            spec.basis = ExponentBasis::standard(m);
            have_basis = true;
        } else if (key == "alphabet") {
            std::vector<Rational> a;
            for (std::size_t k = 1; k < l.tokens.size(); ++k) a.push_back(rational_at(l, k));
            if (a.empty()) fail(l, 1, "alphabet needs at least one value");
            spec.alphabet = std::move(a);
        } else if (key == "value") {
            expect_size(l, 2);
            spec.value = rational_at(l, 1);
        } else if (key == "z") {
            expect_size(l, 3);
            spec.z = {rational_at(l, 1), rational_at(l, 2)};
        } else if (key == "alpha") {
            expect_size(l, 2);
            spec.alpha = rational_at(l, 1);
        } else if (key == "period") {
            expect_size(l, spec.basis.rank() + 1);
            spec.periods.push_back(group_point_at(l, 1, spec.basis.rank()));
        } else if (key == "cell") {
            expect_size(l, spec.basis.rank() + 2);
            spec.cell.emplace_back(group_point_at(l, 1, spec.basis.rank()), rational_at(l, spec.basis.rank() + 1));
        } else if (key == "beta") {
            expect_size(l, 2);
            spec.beta = rational_at(l, 1);
        } else if (key == "coeffs") {
            expect_size(l, spec.basis.rank() + 1);
            spec.coeffs.clear();
            for (std::size_t k = 1; k < l.tokens.size(); ++k) spec.coeffs.push_back(rational_at(l, k));
        } else if (key == "scale") {
            expect_size(l, 2);
            spec.scale = rational_at(l, 1);
        } else if (key == "generators") {
            spec.generators.clear();
            for (std::size_t k = 1; k < l.tokens.size(); ++k) spec.generators.push_back(count_at(l, k));
        } else if (key == "window") {
            spec.window = window_at(l, spec.basis.dim());
        } else if (key == "point") {
            spec.points.push_back(point_record(l, spec.basis.rank()));
        } else if (key == "name") {
            expect_size(l, 2);
            spec.name = l.tokens[1].text;
        } else {
            fail(l, 0, "unknown key '" + key + "'");
        }
        ++i;
    }
    if (spec.kind.empty()) throw ParseError("missing 'kind'", lines.back().number + 1, 1);
    static const std::vector<std::string> kinds{"constant", "torus", "periodic", "floor", "subgroup", "explicit", "example"};
    if (std::find(kinds.begin(), kinds.end(), spec.kind) == kinds.end()) {
        throw ParseError("unknown kind '" + spec.kind + "'", lines[0].number, 1);
    }
    return spec;
}

std::string print_config_spec(const ConfigSpec& spec) {
    std::ostringstream out;
    out << "aperiodic-config 1\nkind " << spec.kind << '\n';
    if (spec.kind != "torus" && spec.kind != "example") {
        if (spec.basis.is_standard()) {
            out << "rank " << spec.basis.rank() << '\n';
        } else {
            out << print_basis(spec.basis);
        }
    }
    if (spec.alphabet) {
        out << "alphabet";
        for (const auto& a : *spec.alphabet) out << ' ' << to_string(a);
        out << '\n';
    }
    auto point = [](const GroupPoint& p) {
        std::string s;
        for (const auto& x : p.coords()) s += " " + to_string(x);
        return s;
    };
    if (spec.kind == "constant") {
        out << "value " << to_string(spec.value) << '\n';
    } else if (spec.kind == "torus") {
        out << "z " << to_string(spec.z.at(0)) << ' ' << to_string(spec.z.at(1)) << '\n';
        out << "alpha " << to_string(spec.alpha) << '\n';
    } else if (spec.kind == "periodic") {
        for (const auto& p : spec.periods) out << "period" << point(p) << '\n';
        for (const auto& [p, v] : spec.cell) out << "cell" << point(p) << ' ' << to_string(v) << '\n';
    } else if (spec.kind == "floor") {
        out << "beta " << to_string(spec.beta) << "\ncoeffs";
        for (const auto& a : spec.coeffs) out << ' ' << to_string(a);
        out << "\nscale " << to_string(spec.scale) << '\n';
    } else if (spec.kind == "subgroup") {
        out << "generators";
        for (auto g : spec.generators) out << ' ' << g;
        out << '\n';
    } else if (spec.kind == "explicit") {
        if (spec.window) out << print_window(*spec.window);
        for (const auto& [p, v] : spec.points) out << print_point(p, v, true);
    } else if (spec.kind == "example") {
        out << "name " << spec.name << '\n';
    }
    return out.str();
}

Configuration build_configuration(const ConfigSpec& spec) {
    std::optional<Configuration> c;
    if (spec.kind == "constant") {
        c = constant_config(spec.basis, spec.value);
    } else if (spec.kind == "torus") {
        if (spec.z.size() != 2) throw ContractError("torus configuration needs z with two entries");
        c = torus_config(spec.z[0], spec.z[1], spec.alpha);
    } else if (spec.kind == "periodic") {
        std::map<GroupPoint, Rational> cell;
        for (const auto& [p, v] : spec.cell) {
            if (!cell.emplace(p, v).second) throw ContractError("cell " + p.to_string() + " listed twice");
        }
        c = periodic_config(spec.basis, spec.periods, cell);
    } else if (spec.kind == "floor") {
        c = floor_config(spec.basis, spec.beta, spec.coeffs, spec.scale);
    } else if (spec.kind == "subgroup") {
        c = subgroup_indicator(spec.basis, spec.generators);
    } else if (spec.kind == "explicit") {
        if (!spec.window) throw ContractError("explicit configuration needs a window");
        std::map<GroupPoint, Rational> values;
        for (const auto& [p, v] : spec.points) {
            if (!values.emplace(p, v).second) throw ContractError("point " + p.to_string() + " listed twice");
        }
        c = explicit_config(spec.basis, std::move(values), *spec.window);
    } else if (spec.kind == "example") {
        if (spec.name == "two-lattice") {
            c = two_lattice_config();
        } else if (spec.name == "punctured-grid") {
            c = punctured_grid_config();
        } else {
            throw ContractError("unknown example configuration '" + spec.name + "' (expected two-lattice or punctured-grid)");
        }
    } else {
        throw ContractError("unknown configuration kind '" + spec.kind + "'");
    }
    if (!spec.alphabet) return *c;
    return c->with_alphabet(Alphabet::make(*spec.alphabet));
}

ConfigSpec explicit_spec(const PointCloud& s) {
    ConfigSpec spec;
    spec.kind = "explicit";
    spec.basis = s.basis();
    spec.window = s.window();
    for (std::size_t i = 0; i < s.size(); ++i) spec.points.emplace_back(s.points()[i], s.colors()[i]);
    return spec;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, std::string_view content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write '" + path + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error("write to '" + path + "' failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error("cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
}

}  // namespace aperiodic
