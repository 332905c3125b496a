#pragma once

#include "aperiodic/box.hpp"
#include "aperiodic/configuration.hpp"
#include "aperiodic/laurent_poly.hpp"
#include "aperiodic/patterns.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aperiodic {

/// Exact evaluation of (f c)(u) at every probe u.
struct AnnihilationCertificate {
    LaurentPoly poly;
    std::string config_kind;
    std::size_t probes = 0;
    /// Largest |(f c)(u)| over the probes.
    Rational max_residual;
    bool verified = false;
    /// First probe with a nonzero residual, in probe order.
    std::optional<GroupPoint> witness;
    Rational witness_residual;
};

/// Throws DomainError when some u - v (v in supp f) leaves the domain of c.
AnnihilationCertificate verify_annihilator(const LaurentPoly& f, const Configuration& c,
                                           const std::vector<GroupPoint>& probes);
AnnihilationCertificate verify_annihilator(const LaurentPoly& f, const Configuration& c, const IntBox& probes);

struct PeriodizerSearch {
    /// sum_i a_i X^{-d_i}, when the kernel has a vector with some a_i != 0 (i >= 1).
    std::optional<LaurentPoly> candidate;
    /// Kernel vector (a_0, a_1, ..., a_m); a_0 pairs with the constant column.
    std::vector<Integer> kernel;
    /// Number of distinct rows (1, c(d_1 + v), ..., c(d_m + v)) observed.
    std::size_t distinct_rows = 0;
    std::size_t probes = 0;
};

/// Low-complexity periodizer search: every observed row (1, c(d_1+v), ..., c(d_m+v))
/// is orthogonal to the returned kernel vector, so sum_i a_i c(d_i + v) = -a_0 on the
/// probes. The constant column is eliminated last so that a kernel vector with a
/// nonzero a_i (i >= 1) is preferred. The candidate holds only on the observed data.
PeriodizerSearch find_periodizer(const Configuration& c, const Shape& d, const std::vector<GroupPoint>& probes);

struct ComposedAnnihilator {
    /// The periodizer candidate g.
    LaurentPoly periodizer;
    /// The difference vector v used, absent when g already annihilates.
    std::optional<GroupPoint> v;
    AnnihilationCertificate certificate;
};

/// Looks for (X^v - 1) g certified on `probes`, trying g itself first and then
/// v in order of increasing max-norm up to `max_norm`.
std::optional<ComposedAnnihilator> compose_annihilator(const Configuration& c, const LaurentPoly& g,
                                                       const IntBox& probes, long max_norm = 4);

/// s = max|a| over the alphabet times sum |f_v|. Requires integral f and alphabet.
Integer dilation_bound(const LaurentPoly& f, const Alphabet& alphabet);

/// gcd(k, s!) = 1, i.e. k has no prime factor <= s. k must be nonzero.
bool dilation_admissible(const Integer& k, const Integer& s);

struct DilationWitness {
    Integer s;
    /// Admissible k that were re-verified.
    std::vector<Integer> tested_k;
    std::vector<Integer> failed_k;
    /// Inadmissible k: nothing is guaranteed for them.
    std::vector<Integer> out_of_contract_k;
    /// Subset of out_of_contract_k for which dilate(f, k) still annihilates.
    std::vector<Integer> out_of_contract_pass;
    bool all_pass = false;
};

/// Re-verifies dilate(f, k) for every k in `ks` on `probes`.
DilationWitness check_dilation(const LaurentPoly& f, const Configuration& c, const Integer& s,
                               const std::vector<Integer>& ks, const IntBox& probes);

/// prod over v in supp(f), v != u, of (X^{r (v - u)} - 1).
LaurentPoly special_annihilator(const LaurentPoly& f, const GroupPoint& u, const Integer& r);

/// The v of a difference polynomial X^v - 1, or nothing.
std::optional<GroupPoint> difference_vector(const LaurentPoly& f);

struct MergeResult {
    std::vector<LaurentPoly> factors;
    bool ok = false;
    std::string diagnostic;
    /// Certificate of the product of the merged factors on the probes.
    std::optional<AnnihilationCertificate> certificate;
};

/// Groups difference factors by primitive direction and replaces each group with
/// more than one factor by a single X^{t w} - 1, t the smallest positive integer
/// <= bound for which X^{t w} - 1 annihilates (product of the other factors) c
/// on the probes. Groups are processed in order of first appearance.
MergeResult merge_parallel(const std::vector<LaurentPoly>& factors, const Configuration& c, const IntBox& probes,
                           long bound = 256);

}  // namespace aperiodic
