#pragma once

#include "aperiodic/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace aperiodic {

using IntMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Row-style Hermite normal form: nonzero rows only, upper echelon, positive
/// pivots, entries above each pivot reduced into [0, pivot). The rows span the
/// same lattice as the input.
IntMatrix hermite_normal_form(IntMatrix rows);

/// Rank over Q, computed by fraction-free (Bareiss) elimination.
std::size_t matrix_rank(const RationalMatrix& a);
std::size_t matrix_rank(const IntMatrix& a);

/// A nonzero integer vector x with A x = 0, or nothing when the kernel is trivial.
///
/// Columns are eliminated in `column_order` (all columns, each once; empty means
/// natural order). The free column met first in that order is set to one and
/// the others to zero. The result is primitive and its first nonzero entry is
/// positive.
std::optional<std::vector<Integer>> nullspace_vector(const RationalMatrix& a,
                                                     const std::vector<std::size_t>& column_order = {});

/// Divides by the gcd and makes the first nonzero entry positive.
std::vector<Integer> normalize_primitive(std::vector<Integer> v);

}  // namespace aperiodic
