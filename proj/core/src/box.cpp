#include "aperiodic/box.hpp"

#include "aperiodic/error.hpp"

#include <algorithm>

namespace aperiodic {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t at = text.find(sep, start);
        out.push_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
        if (at == std::string_view::npos) break;
        start = at + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Splits "a..b" into its endpoints; "a" alone gives (a, a).
std::pair<std::string_view, std::string_view> range_parts(std::string_view item, std::size_t column) {
    item = trim(item);
    if (item.empty()) throw ParseError("empty range", 1, column);
    const std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) return {item, item};
    return {trim(item.substr(0, dots)), trim(item.substr(dots + 2))};
}

}  // namespace

IntBox::IntBox(std::vector<Integer> lo, std::vector<Integer> hi) : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower.size() != upper.size()) throw ContractError("box corners have different ranks");
}

IntBox IntBox::parse(std::string_view text) {
    IntBox box;
    std::size_t column = 1;
    for (std::string_view item : split(text, ',')) {
        const auto [a, b] = range_parts(item, column);
        try {
            box.lower.push_back(parse_integer(a));
            box.upper.push_back(parse_integer(b));
        } catch (const ContractError& e) {
            throw ParseError(e.what(), 1, column);
        }
        column += item.size() + 1;
    }
    return box;
}

IntBox IntBox::cube(std::size_t rank, long radius) {
    return IntBox(std::vector<Integer>(rank, Integer(-radius)), std::vector<Integer>(rank, Integer(radius)));
}

bool IntBox::empty() const {
    if (lower.empty()) return true;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (lower[i] > upper[i]) return true;
    }
    return false;
}

std::uint64_t IntBox::count() const {
    if (empty()) return 0;
    Integer n = 1;
    for (std::size_t i = 0; i < rank(); ++i) n *= Integer(upper[i] - lower[i] + 1);
    if (n > Integer(1) << 62) throw ContractError("box " + to_string() + " has too many points");
    return n.get_ui();
}

bool IntBox::contains(const GroupPoint& p) const {
    if (p.rank() != rank()) return false;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (p[i] < lower[i] || p[i] > upper[i]) return false;
    }
    return true;
}

IntBox IntBox::shrunk(const std::vector<Integer>& by) const {
    if (by.size() != rank()) throw ContractError("shrink amounts do not match box rank");
    IntBox out = *this;
    for (std::size_t i = 0; i < rank(); ++i) {
        out.lower[i] += by[i];
        out.upper[i] -= by[i];
    }
    return out;
}

void IntBox::for_each(const std::function<void(const GroupPoint&)>& visit) const {
    if (empty()) return;
    GroupPoint p(lower);
    while (true) {
        visit(p);
        std::size_t i = rank();
        while (i > 0) {
            --i;
            if (p[i] < upper[i]) {
                ++p[i];
                for (std::size_t j = i + 1; j < rank(); ++j) p[j] = lower[j];
                break;
            }
            if (i == 0) return;
        }
    }
}

std::vector<GroupPoint> IntBox::points() const {
    std::vector<GroupPoint> out;
    out.reserve(count());
    for_each([&](const GroupPoint& p) { out.push_back(p); });
    return out;
}

std::string IntBox::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (i > 0) out += ",";
        out += lower[i].get_str() + ".." + upper[i].get_str();
    }
    return out;
}

RationalBox RationalBox::parse(std::string_view text) {
    RationalBox box;
    std::size_t column = 1;
    for (std::string_view item : split(text, ',')) {
        const auto [a, b] = range_parts(item, column);
        try {
            box.lower.push_back(parse_rational(a));
            box.upper.push_back(parse_rational(b));
        } catch (const ContractError& e) {
            throw ParseError(e.what(), 1, column);
        }
        if (box.lower.back() > box.upper.back()) throw ParseError("range lower end exceeds upper end", 1, column);
        column += item.size() + 1;
    }
    return box;
}

bool RationalBox::contains(const RationalVector& x) const {
    if (x.size() != dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] < lower[i] || x[i] > upper[i]) return false;
    }
    return true;
}

Rational RationalBox::face_distance(const RationalVector& x) const {
    Rational best;
    for (std::size_t i = 0; i < dim(); ++i) {
        const Rational d = std::min<Rational>(x[i] - lower[i], upper[i] - x[i]);
        if (i == 0 || d < best) best = d;
    }
    return best;
}

RationalBox RationalBox::shrunk(const Rational& by) const {
    RationalBox out = *this;
    for (std::size_t i = 0; i < dim(); ++i) {
        out.lower[i] += by;
        out.upper[i] -= by;
    }
    return out;
}

std::string RationalBox::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (i > 0) out += ",";
        out += aperiodic::to_string(lower[i]) + ".." + aperiodic::to_string(upper[i]);
    }
    return out;
}

}  // namespace aperiodic
