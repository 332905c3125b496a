#pragma once

#include "aperiodic/laurent_poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace aperiodic {

using IntDirection = std::vector<Integer>;

/// Convex hull of the embedded support of a 2-D polynomial.
struct NewtonPolygon {
    /// Counter-clockwise, no collinear vertices. One vertex for a monomial, two for a segment.
    std::vector<RationalVector> vertices;
    /// Primitive outward normal of each edge (a segment has two, a point none), sorted.
    std::vector<IntDirection> normals;
};

/// Requires a nonzero polynomial over a basis of dimension 2.
NewtonPolygon newton_polygon(const LaurentPoly& f);

struct CoverageOptions {
    /// Random directions tried in dimension >= 3.
    std::size_t samples = 2000;
    std::uint64_t seed = 1;
    /// Extra directions always tested in dimension >= 3.
    std::vector<RationalVector> critical;
};

enum class CoverageMethod { exact, sampled };
enum class CoverageConclusion { premise_met, gaps_listed };
std::string to_string(CoverageMethod m);
std::string to_string(CoverageConclusion c);

struct CoverageReport {
    std::size_t dim = 0;
    CoverageMethod method = CoverageMethod::exact;
    /// Dimension 2 only.
    std::vector<NewtonPolygon> polygons;
    /// Directions w for which no member has a vertex in direction w. Dimension 2:
    /// exactly the outward edge normals shared by every member. Dimension >= 3:
    /// the sampled directions that failed.
    std::vector<IntDirection> uncovered;
    std::size_t directions_tested = 0;
    CoverageConclusion conclusion = CoverageConclusion::gaps_listed;
};

/// Does every direction w have a family member with a vertex in direction w?
/// Exact in dimensions 1 and 2, sampled above.
CoverageReport vertex_coverage(const std::vector<LaurentPoly>& family, const CoverageOptions& options = {});

struct HyperplaneVerdict {
    RationalVector direction;
    /// No nonzero support point is orthogonal to `direction`.
    bool holds = false;
    std::optional<GroupPoint> witness;
};

/// For each v: supp(f) meets the hyperplane v^perp only in 0. Requires 0 in supp(f);
/// shift with `normalized_at` first if needed.
std::vector<HyperplaneVerdict> hyperplane_condition(const LaurentPoly& f, const std::vector<RationalVector>& directions);

/// f * X^(-u), which has u moved to the origin. Requires u in supp(f).
LaurentPoly normalized_at(const LaurentPoly& f, const GroupPoint& u);

}  // namespace aperiodic
