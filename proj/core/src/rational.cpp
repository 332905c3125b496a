#include "aperiodic/rational.hpp"

#include "aperiodic/error.hpp"

#include <mpfr.h>

#include <atomic>
#include <cctype>
#include <cstdlib>

namespace aperiodic {

namespace {

std::atomic<unsigned> g_precision_bits{0};

unsigned read_precision_env() {
    const char* env = std::getenv("APERIODIC_PRECISION_BITS");
    if (env == nullptr || *env == '\0') return 128;
    char* end = nullptr;
    const unsigned long bits = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || bits < 16 || bits > 100000) {
        throw ContractError("APERIODIC_PRECISION_BITS must be an integer in [16, 100000]");
    }
    return static_cast<unsigned>(bits);
}

// Exact value of an mpfr number as a rational.
Rational from_mpfr(const mpfr_t x) {
    Integer mantissa;
    const mpfr_exp_t exp = mpfr_get_z_2exp(mantissa.get_mpz_t(), x);
    Rational out(mantissa);
    if (exp >= 0) {
        mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(exp));
    } else {
        mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-exp));
    }
    out.canonicalize();
    return out;
}

class MpfrValue {
public:
    explicit MpfrValue(unsigned bits) { mpfr_init2(value_, static_cast<mpfr_prec_t>(bits) + 8); }
    ~MpfrValue() { mpfr_clear(value_); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
    mpfr_ptr get() { return value_; }

private:
    mpfr_t value_;
};

}  // namespace

Rational make_rational(long num, long den) {
    if (den == 0) throw ContractError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer parse_integer(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ContractError("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ContractError("malformed integer literal '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
            throw ContractError("malformed integer literal '" + s + "'");
        }
    }
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        const Integer num = parse_integer(text.substr(0, slash));
        const std::string_view den_text = text.substr(slash + 1);
        if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
            throw ContractError("malformed rational literal '" + std::string(text) + "'");
        }
        const Integer den = parse_integer(den_text);
        if (den == 0) throw ContractError("zero denominator in '" + std::string(text) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    const auto dot_pos = text.find('.');
    if (dot_pos != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot_pos);
        const std::string_view frac_part = text.substr(dot_pos + 1);
        bool negative = false;
        if (!int_part.empty() && (int_part[0] == '-' || int_part[0] == '+')) {
            negative = int_part[0] == '-';
            int_part.remove_prefix(1);
        }
        if (int_part.empty() && frac_part.empty()) {
            throw ContractError("malformed decimal literal '" + std::string(text) + "'");
        }
        std::string digits = std::string(int_part) + std::string(frac_part);
        if (digits.empty()) digits = "0";
        const Integer num = parse_integer(digits);
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
        Rational q(negative ? Integer(-num) : num, den);
        q.canonicalize();
        return q;
    }
    return Rational(parse_integer(text));
}

Integer floor(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Integer ceil(const Rational& q) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

unsigned precision_bits() {
    unsigned bits = g_precision_bits.load();
    if (bits == 0) {
        bits = read_precision_env();
        g_precision_bits.store(bits);
    }
    return bits;
}

void set_precision_bits(unsigned bits) {
    if (bits < 16) throw ContractError("precision must be at least 16 bits");
    g_precision_bits.store(bits);
}

Rational pi_surrogate(unsigned bits) {
    MpfrValue v(bits);
    mpfr_const_pi(v.get(), MPFR_RNDN);
    return from_mpfr(v.get());
}

Rational sqrt_surrogate(const Rational& x, unsigned bits) {
    if (x < 0) throw ContractError("sqrt of a negative rational");
    MpfrValue v(bits);
    mpfr_set_q(v.get(), x.get_mpq_t(), MPFR_RNDN);
    mpfr_sqrt(v.get(), v.get(), MPFR_RNDN);
    return from_mpfr(v.get());
}

Rational golden_ratio_surrogate(unsigned bits) {
    return (Rational(1) + sqrt_surrogate(Rational(5), bits)) / 2;
}

Interval sqrt_bracket(const Rational& x, unsigned bits) {
    if (x < 0) throw ContractError("sqrt of a negative rational");
    // Exact when numerator and denominator are perfect squares.
    if (mpz_perfect_square_p(x.get_num_mpz_t()) && mpz_perfect_square_p(x.get_den_mpz_t())) {
        Integer n, d;
        mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
        Rational r(n, d);
        r.canonicalize();
        return {r, r};
    }
    MpfrValue lo(bits);
    MpfrValue hi(bits);
    mpfr_set_q(lo.get(), x.get_mpq_t(), MPFR_RNDD);
    mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_set_q(hi.get(), x.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
    return {from_mpfr(lo.get()), from_mpfr(hi.get())};
}

double to_double(const Rational& q) { return q.get_d(); }

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw ContractError("dimension mismatch in dot product");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational norm_sq(const RationalVector& a) { return dot(a, a); }

RationalVector sub(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw ContractError("dimension mismatch");
    RationalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw ContractError("dimension mismatch");
    RationalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RationalVector scale(const RationalVector& a, const Rational& s) {
    RationalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
    return out;
}

bool is_zero(const RationalVector& a) {
    for (const auto& x : a) {
        if (x != 0) return false;
    }
    return true;
}

std::string to_string(const RationalVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

Integer common_denominator(const std::vector<Rational>& v) {
    Integer l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

std::vector<Integer> primitive_direction(const RationalVector& v) {
    if (is_zero(v)) throw ContractError("zero vector has no direction");
    const Integer den = common_denominator(v);
    std::vector<Integer> out(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational scaled = v[i] * den;
        out[i] = scaled.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    for (auto& x : out) x /= g;
    return out;
}

}  // namespace aperiodic
