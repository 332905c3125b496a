#include "aperiodic/plot.hpp"

#include "aperiodic/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace aperiodic {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string header(double w, double h) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
           "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

// Affine map of a rational interval onto [a, b] pixels.
struct Axis {
    double lo;
    double hi;
    double a;
    double b;
    double operator()(double x) const { return hi == lo ? (a + b) / 2 : a + (x - lo) / (hi - lo) * (b - a); }
};

}  // namespace

std::string svg_tick_rows(const std::vector<std::pair<std::string, PointCloud>>& rows) {
    if (rows.empty()) throw ContractError("svg_tick_rows: nothing to plot");
    double lo = 0;
    double hi = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const PointCloud& s = rows[i].second;
        if (s.dim() != 1) throw ContractError("svg_tick_rows: '" + rows[i].first + "' is not one-dimensional");
        const double a = to_double(s.window().lower[0]);
        const double b = to_double(s.window().upper[0]);
        lo = i == 0 ? a : std::min(lo, a);
        hi = i == 0 ? b : std::max(hi, b);
    }
    const double width = 800;
    const double row_h = 50;
    const Axis x{lo, hi, 80, width - 20};
    std::ostringstream out;
    out << header(width, row_h * static_cast<double>(rows.size()) + 20);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double y = 30 + row_h * static_cast<double>(i);
        const PointCloud& s = rows[i].second;
        out << "<text x=\"10\" y=\"" << num(y + 4) << "\" font-family=\"monospace\" font-size=\"12\">"
            << escape(rows[i].first) << "</text>\n";
        out << "<line x1=\"" << num(x(to_double(s.window().lower[0]))) << "\" y1=\"" << num(y) << "\" x2=\""
            << num(x(to_double(s.window().upper[0]))) << "\" y2=\"" << num(y) << "\" stroke=\"#999\"/>\n";
        for (const auto& e : s.embedded()) {
            const double px = x(to_double(e[0]));
            out << "<line x1=\"" << num(px) << "\" y1=\"" << num(y - 8) << "\" x2=\"" << num(px) << "\" y2=\""
                << num(y + 8) << "\" stroke=\"black\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string svg_cloud_2d(const PointCloud& s, const std::vector<PatchHighlight>& highlights) {
    if (s.dim() != 2) throw ContractError("svg_cloud_2d: SVG output needs a two-dimensional point set");
    const double size = 600;
    const RationalBox& w = s.window();
    const double x0 = to_double(w.lower[0]);
    const double x1 = to_double(w.upper[0]);
    const double y0 = to_double(w.lower[1]);
    const double y1 = to_double(w.upper[1]);
    const double span = std::max({x1 - x0, y1 - y0, 1e-9});
    const double k = (size - 40) / span;
    auto px = [&](double x) { return 20 + (x - x0) * k; };
    auto py = [&](double y) { return size - 20 - (y - y0) * k; };
    std::ostringstream out;
    out << header(size, size);
    out << "<rect x=\"" << num(px(x0)) << "\" y=\"" << num(py(y1)) << "\" width=\"" << num((x1 - x0) * k)
        << "\" height=\"" << num((y1 - y0) * k) << "\" fill=\"none\" stroke=\"#999\"/>\n";
    for (const auto& h : highlights) {
        if (h.center >= s.size()) throw ContractError("svg_cloud_2d: highlight index out of range");
        const auto& e = s.embedded()[h.center];
        out << "<circle cx=\"" << num(px(to_double(e[0]))) << "\" cy=\"" << num(py(to_double(e[1]))) << "\" r=\""
            << num(to_double(h.radius) * k) << "\" fill=\"#fde\" stroke=\"#c36\"/>\n";
    }
    for (const auto& e : s.embedded()) {
        out << "<circle cx=\"" << num(px(to_double(e[0]))) << "\" cy=\"" << num(py(to_double(e[1])))
            << "\" r=\"2\" fill=\"black\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string svg_newton_polygons(const std::vector<NewtonPolygon>& polygons) {
    if (polygons.empty()) throw ContractError("svg_newton_polygons: nothing to plot");
    const double cell = 260;
    std::ostringstream out;
    out << header(cell * static_cast<double>(polygons.size()), cell);
    for (std::size_t i = 0; i < polygons.size(); ++i) {
        const auto& p = polygons[i];
        double lo = 0;
        double hi = 0;
        bool first = true;
        for (const auto& v : p.vertices) {
            for (const auto& c : v) {
                const double d = to_double(c);
                lo = first ? d : std::min(lo, d);
                hi = first ? d : std::max(hi, d);
                first = false;
            }
        }
        lo -= 1;
        hi += 1;
        const double off = cell * static_cast<double>(i);
        const Axis ax{lo, hi, off + 30, off + cell - 30};
        const Axis ay{lo, hi, cell - 30, 30};
        std::string pts;
        for (const auto& v : p.vertices) {
            if (!pts.empty()) pts += ' ';
            pts += num(ax(to_double(v[0]))) + "," + num(ay(to_double(v[1])));
        }
        out << "<polygon points=\"" << pts << "\" fill=\"#def\" stroke=\"#236\"/>\n";
        for (const auto& v : p.vertices) {
            out << "<circle cx=\"" << num(ax(to_double(v[0]))) << "\" cy=\"" << num(ay(to_double(v[1])))
                << "\" r=\"3\" fill=\"#236\"/>\n";
        }
        if (p.vertices.size() >= 3) {
            for (std::size_t e = 0; e < p.vertices.size(); ++e) {
                const auto& a = p.vertices[e];
                const auto& b = p.vertices[(e + 1) % p.vertices.size()];
                const double mx = (to_double(a[0]) + to_double(b[0])) / 2;
                const double my = (to_double(a[1]) + to_double(b[1])) / 2;
                // Normal of this edge: edge turned clockwise, scaled to a fixed length.
                double nx = to_double(b[1] - a[1]);
                double ny = to_double(a[0] - b[0]);
                const double len = std::max(std::abs(nx), std::abs(ny));
                nx = nx / len * 0.5;
                ny = ny / len * 0.5;
                out << "<line x1=\"" << num(ax(mx)) << "\" y1=\"" << num(ay(my)) << "\" x2=\"" << num(ax(mx + nx))
                    << "\" y2=\"" << num(ay(my + ny)) << "\" stroke=\"#c36\"/>\n";
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string lagarias_csv(const LagariasReport& r) {
    std::string out = "T,N,bound,triggered\n";
    for (const auto& p : r.curve) {
        const Rational bound = p.t / (2 * r.covering_upper);
        out += to_string(p.t) + "," + std::to_string(p.n) + "," + to_string(bound) + "," +
               (p.triggered ? "1" : "0") + "\n";
    }
    return out;
}

}  // namespace aperiodic
