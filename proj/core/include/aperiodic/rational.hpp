#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace aperiodic {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point of Q^d, used for embedded (geometric) coordinates.
using RationalVector = std::vector<Rational>;

/// Closed rational interval [lower, upper].
struct Interval {
    Rational lower;
    Rational upper;

    bool is_exact() const { return lower == upper; }
};

Rational make_rational(long num, long den = 1);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "p/q", "-p/q" and decimal literals such as "3.25" or "-0.5".
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Rational abs(const Rational& q);
bool is_integer(const Rational& q);

/// Bits used when irrational constants are replaced by rational surrogates.
/// Reads APERIODIC_PRECISION_BITS once; defaults to 128.
unsigned precision_bits();

/// Overrides the process-wide precision (mainly for tests and the CLI).
void set_precision_bits(unsigned bits);

/// Rational surrogates of irrational constants, accurate to about 2^-bits.
Rational pi_surrogate(unsigned bits = precision_bits());
Rational sqrt_surrogate(const Rational& x, unsigned bits = precision_bits());
Rational golden_ratio_surrogate(unsigned bits = precision_bits());

/// Rational bracket of sqrt(x) for x >= 0; exact when x is a square of a rational.
Interval sqrt_bracket(const Rational& x, unsigned bits = precision_bits());

double to_double(const Rational& q);

// Vector helpers on embedded coordinates.
Rational dot(const RationalVector& a, const RationalVector& b);
Rational norm_sq(const RationalVector& a);
RationalVector sub(const RationalVector& a, const RationalVector& b);
RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector scale(const RationalVector& a, const Rational& s);
bool is_zero(const RationalVector& a);
std::string to_string(const RationalVector& v);

/// Least common multiple of the denominators of `v`.
Integer common_denominator(const std::vector<Rational>& v);

/// Scales a nonzero rational vector to the primitive integer vector pointing the same way.
std::vector<Integer> primitive_direction(const RationalVector& v);

}  // namespace aperiodic
