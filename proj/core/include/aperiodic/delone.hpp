#pragma once

#include "aperiodic/point_cloud.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aperiodic {

/// Outcome of a property that finite data can only test on a window.
enum class Verdict { consistent, fails, inconclusive };
std::string to_string(Verdict v);

struct DeloneOptions {
    /// Grid pitch for the covering-radius search when d >= 2; 0 picks
    /// (largest window extent) / 96.
    Rational grid_pitch = 0;
};

struct DeloneReport {
    /// Squared minimum distance between distinct points (exact).
    Rational min_distance_sq;
    /// Packing radius r = min distance / 2, exact when min_distance_sq is a square.
    Interval packing_radius;
    /// Covering radius on the window interior.
    Interval covering_radius;
    /// Margin actually excluded at the window faces for the covering search.
    Rational margin;
    /// Grid pitch used (0 in dimension one, where the result is exact).
    Rational grid_pitch;
    std::pair<GroupPoint, GroupPoint> closest_pair;
    /// Center of a largest empty ball found (embedded coordinates).
    RationalVector deepest_hole;
    bool uniformly_discrete = false;
    bool relatively_dense_in_window = false;
};

/// Packing radius exactly, covering radius bracketed on the window interior.
/// 1-D: R is half the largest gap between consecutive points. d >= 2: largest
/// nearest-point distance over a grid, upper bound padded by pitch * sqrt(d) / 2.
DeloneReport delone_constants(const PointCloud& s, const DeloneOptions& options = {});

/// Center-relative T-patch: sorted (s' - s, color of s') for |s' - s| <= T.
using PatchContent = std::vector<std::pair<GroupPoint, Rational>>;

struct PatchCount {
    std::size_t count = 0;
    /// Number of centers at distance >= T from the window faces.
    std::size_t centers = 0;
    /// Always true: patches that never occur in the window are not seen.
    bool window_lower_bound = true;
};

PatchContent patch_at(const PointCloud& s, std::size_t center, const Rational& t);

/// N_S(T) restricted to centers whose T-ball lies in the window.
/// Throws ContractError when no such center exists or T < 0.
PatchCount patch_count(const PointCloud& s, const Rational& t);

struct LagariasPoint {
    Rational t;
    std::size_t n = 0;
    bool triggered = false;
};

struct LagariasReport {
    Rational covering_upper;
    std::vector<LagariasPoint> curve;
    /// First T with N_S(T) < T / (2 R.upper).
    std::optional<Rational> trigger;
};

/// Evaluates N_S(T) < T / (2 R) on the grid. A trigger is a window-restricted
/// premise for strong periodicity, not a proof.
LagariasReport lagarias_test(const PointCloud& s, const std::vector<Rational>& t_grid,
                             const DeloneOptions& options = {});

struct ClassOptions {
    /// Meyer closeness threshold; 0 means packing radius / 4.
    Rational epsilon = 0;
    /// Radius for the finite-local-complexity difference set; 0 means 2 R.upper.
    Rational flc_radius = 0;
    DeloneOptions delone;
};

struct ClassReport {
    DeloneReport constants;

    Rational flc_radius;
    std::size_t flc_inner = 0;
    std::size_t flc_outer = 0;
    Verdict flc = Verdict::inconclusive;
    /// A difference seen in the full window but not in the inner half window.
    std::optional<GroupPoint> flc_witness;

    Rational epsilon;
    Verdict meyer = Verdict::inconclusive;
    /// Two distinct differences closer than epsilon.
    std::optional<std::pair<GroupPoint, GroupPoint>> meyer_witness;
    Rational meyer_witness_distance_sq;

    /// Rank of the subgroup generated by the observed differences.
    std::size_t difference_rank = 0;
    bool finitely_generated = true;
};

/// FLC by comparing (S - S) within the FLC radius on the inner half window and
/// the full window; Meyer by searching distinct differences closer than epsilon;
/// finite generation structurally, with the rank of the observed differences.
ClassReport class_tests(const PointCloud& s, const ClassOptions& options = {});

struct MeyerHTReport {
    GroupPoint origin;
    Rational covering_upper;
    std::vector<GroupPoint> u;
    std::vector<GroupPoint> h_t;
    std::size_t lhs = 0;
    std::size_t rhs = 0;
    std::size_t n_t_plus_r = 0;
    bool holds = false;
};

/// U = (S + S - S) within B_R and H_T = U together with S within B_T, both taken
/// around the point of S nearest the window center. lhs is the number of H_T
/// patterns seen (the empty one included), rhs = 1 + |U| N_S(T + R).
MeyerHTReport meyer_ht(const PointCloud& s, const Rational& t, const DeloneOptions& options = {});

struct MinkowskiReport {
    PointCloud sum;
    Rational min_distance_sq_inner;
    Rational min_distance_sq_outer;
    Verdict uniformly_discrete = Verdict::inconclusive;
    std::optional<std::pair<GroupPoint, GroupPoint>> witness;
    ClassReport classes;
};

/// Builds S + F in the window and compares the minimum spacing on the inner half
/// window with the full window; spacing that keeps shrinking fails uniform
/// discreteness. Class tests are rerun on S + F when it is uniformly discrete.
MinkowskiReport minkowski_flc(const PointCloud& s, const std::vector<GroupPoint>& f,
                              const ClassOptions& options = {});

/// Box with the same center as `w` and half its extent along every axis.
RationalBox inner_half(const RationalBox& w);

}  // namespace aperiodic
