#include "aperiodic/poly_text.hpp"

#include "aperiodic/error.hpp"

#include <algorithm>
#include <cctype>

namespace aperiodic {

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, ExponentBasis basis) : text_(text), basis_(std::move(basis)) {}

    LaurentPoly parse() {
        LaurentPoly f = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(what, line, col);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    LaurentPoly expr() {
        LaurentPoly acc(basis_);
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        LaurentPoly t = term();
        acc += negate ? -t : t;
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }

    LaurentPoly term() {
        LaurentPoly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    LaurentPoly factor() {
        if (accept('-')) return -factor();
        LaurentPoly base = primary();
        if (accept('^')) {
            const long e = signed_int_exponent();
            return power(base, e);
        }
        return base;
    }

    LaurentPoly power(const LaurentPoly& base, long e) {
        if (base.size() == 1 && base.terms().begin()->second == 1) {
            return LaurentPoly::monomial(basis_, Integer(e) * base.terms().begin()->first, 1);
        }
        if (e < 0) fail("negative power of a non-monomial");
        LaurentPoly out = LaurentPoly::constant(basis_, 1);
        for (long i = 0; i < e; ++i) out = out * base;
        return out;
    }

    long signed_int_exponent() {
        skip_ws();
        if (accept('(')) {
            const long v = signed_long();
            expect(')');
            return v;
        }
        return signed_long();
    }

    long signed_long() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected an integer");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    Integer signed_integer() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected an integer");
        return parse_integer(text_.substr(start, pos_ - start));
    }

    LaurentPoly primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            LaurentPoly inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return LaurentPoly::constant(basis_, coefficient());
        if (c == 'X') {
            ++pos_;
            expect('^');
            expect('(');
            std::vector<Integer> coords;
            coords.push_back(signed_integer());
            while (accept(',')) coords.push_back(signed_integer());
            expect(')');
            if (coords.size() != basis_.rank()) {
                fail("exponent has " + std::to_string(coords.size()) + " coordinates, basis rank is " +
                     std::to_string(basis_.rank()));
            }
            return LaurentPoly::monomial(basis_, GroupPoint(std::move(coords)), 1);
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos_;
            const std::size_t axis = static_cast<std::size_t>(c - 'x');
            if (axis >= basis_.rank()) fail(std::string("variable '") + c + "' exceeds basis rank");
            return LaurentPoly::monomial(basis_, GroupPoint::unit(basis_.rank(), axis), 1);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    Rational coefficient() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
            ++pos_;
        }
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            const std::size_t den_start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == den_start) fail("expected denominator");
        }
        try {
            return parse_rational(text_.substr(start, pos_ - start));
        } catch (const ContractError& e) {
            pos_ = start;
            fail(e.what());
        }
    }

    std::string_view text_;
    ExponentBasis basis_;
    std::size_t pos_ = 0;
};

// Rank implied by the text: the length of X^(...) tuples, else the highest of x/y/z used.
std::size_t infer_rank(std::string_view text) {
    std::size_t tuple_rank = 0;
    std::size_t var_rank = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == 'X') {
            std::size_t j = i + 1;
            while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
            if (j < text.size() && text[j] == '^') ++j;
            while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
            if (j < text.size() && text[j] == '(') {
                std::size_t commas = 0;
                std::size_t k = j + 1;
                while (k < text.size() && text[k] != ')') {
                    if (text[k] == ',') ++commas;
                    ++k;
                }
                tuple_rank = std::max(tuple_rank, commas + 1);
            }
        } else if (c == 'x' || c == 'y' || c == 'z') {
            var_rank = std::max(var_rank, static_cast<std::size_t>(c - 'x') + 1);
        }
    }
    if (tuple_rank > 0) return std::max(tuple_rank, var_rank);
    return std::max<std::size_t>(var_rank, 1);
}

}  // namespace

LaurentPoly parse_poly(std::string_view text, const std::optional<ExponentBasis>& basis) {
    ExponentBasis b = basis ? *basis : ExponentBasis::standard(infer_rank(text));
    PolyParser parser(text, std::move(b));
    return parser.parse();
}

std::string print_poly(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const GroupPoint& u = it->first;
        Rational c = it->second;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (u.is_zero()) {
            out += to_string(c);
            continue;
        }
        if (c != 1) out += to_string(c) + "*";
        out += "X^" + u.to_string();
    }
    return out;
}

std::vector<GroupPoint> parse_point_list(std::string_view text) {
    std::vector<GroupPoint> out;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ';')) ++pos;
    };
    skip();
    while (pos < text.size()) {
        if (text[pos] != '(') throw ParseError("expected '(' in point list", 1, pos + 1);
        const std::size_t close = text.find(')', pos);
        if (close == std::string_view::npos) throw ParseError("unterminated point", 1, pos + 1);
        std::vector<Integer> coords;
        std::string_view body = text.substr(pos + 1, close - pos - 1);
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = body.find(',', start);
            std::string item(body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
            item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
                       item.end());
            try {
                coords.push_back(parse_integer(item));
            } catch (const ContractError&) {
                throw ParseError("bad coordinate '" + item + "'", 1, pos + 2 + start);
            }
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (!out.empty() && out.front().rank() != coords.size()) {
            throw ParseError("points of different rank in list", 1, pos + 1);
        }
        out.emplace_back(std::move(coords));
        pos = close + 1;
        skip();
    }
    return out;
}

}  // namespace aperiodic
