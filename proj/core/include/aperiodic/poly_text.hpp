#pragma once

#include "aperiodic/laurent_poly.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace aperiodic {

/// Parses the polynomial text grammar:
///
///   expr    := ['-'|'+'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := '-' factor | primary ['^' int]
///   primary := coeff | 'X^(' int (',' int)* ')' | 'x' | 'y' | 'z' | '(' expr ')'
///   coeff   := digits ['/' digits] | decimal
///
/// `x`, `y`, `z` are shorthands for the first three unit exponents, `x^e`
/// for X^(e) in rank 1. `^` on a parenthesized expression is a nonnegative
/// integer power. With no basis the rank is inferred and the standard basis
/// of Z^m is used.
LaurentPoly parse_poly(std::string_view text, const std::optional<ExponentBasis>& basis = std::nullopt);

/// Canonical text: terms in descending exponent order, `c*X^(e1,...,em)`.
/// parse_poly(print_poly(f), f.basis()) == f.
std::string print_poly(const LaurentPoly& f);

/// Parses "(e1,...,em);(...)" into group points (used for shapes and direction lists).
std::vector<GroupPoint> parse_point_list(std::string_view text);

}  // namespace aperiodic
