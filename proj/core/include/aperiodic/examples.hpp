#pragma once

#include "aperiodic/configuration.hpp"
#include "aperiodic/point_cloud.hpp"

#include <string>
#include <vector>

namespace aperiodic {

/// step*Z inside [lo, hi] over the standard basis of Z.
PointCloud integer_cloud(const Integer& step, const Rational& lo, const Rational& hi);

/// Ideal crystal: z_1 p_1 + ... + z_m p_m + f for z in `cells`, f in `motif`,
/// kept when the embedding lies in `window`.
PointCloud crystal_cloud(const ExponentBasis& basis, const std::vector<GroupPoint>& periods,
                         const std::vector<GroupPoint>& motif, const IntBox& cells, const RationalBox& window);

/// The Fibonacci chain a + b*phi over the basis {1, phi}: points whose conjugate
/// a + b*phi' lies in [-1/2, -1/2 + phi). Membership is decided exactly in Z[sqrt 5];
/// gaps are 1 and phi.
PointCloud fibonacci_cloud(const Rational& lo, const Rational& hi);

/// {n + 1/n : n != 0} inside [lo, hi], over the rank-one basis generated by
/// 1/lcm(1..N) where N bounds |n| in the window.
PointCloud s1_cloud(const Rational& lo, const Rational& hi);
/// {n pi} together with the integers that are neither floor(n pi) nor ceil(n pi), over {1, pi}.
PointCloud s2_cloud(const Rational& lo, const Rational& hi);
/// -N together with {n pi : n in N}, over {1, pi}.
PointCloud s3_cloud(const Rational& lo, const Rational& hi);

/// (X^(1,-1) - 1)(X^(0,1) - 1)(X^(1,0) - 1) over the standard basis of Z^2,
/// which annihilates every torus_config.
LaurentPoly torus_annihilator();

/// The floor terms of torus_config(z1, z2, alpha), in the order of the directions
/// (1,-1), (0,1), (1,0): floor(z1+z2+(i+j)a), -floor(z1+i a), -floor(z2+j a).
std::vector<Configuration> torus_closed_forms(const Rational& z1, const Rational& z2, const Rational& alpha);

/// Basis {1, alpha} (alpha = sqrt 2 surrogate) in two independence classes.
ExponentBasis z_alpha_basis();
/// c = 1_Z + 1_{alpha Z}, annihilated by (x - 1)(x^alpha - 1) and not periodic.
Configuration two_lattice_config();
/// Support of two_lattice_config inside [lo, hi].
PointCloud two_lattice_cloud(const Rational& lo, const Rational& hi);

/// Basis e1 = (1,0), e_alpha = (alpha,0), e2 = (0,1); e_alpha in its own class.
ExponentBasis punctured_grid_basis();
/// 1 on Z x (Z \ {0}) and on alpha Z x {0}; annihilated by the line polynomial
/// (x - 1)(x^alpha - 1) yet not periodic.
Configuration punctured_grid_config();
/// Support of punctured_grid_config inside `window` (a 2-D box).
PointCloud punctured_grid_cloud(const RationalBox& window);

/// Names accepted by example_cloud: S1, S2, S3, fibonacci, two-lattice, punctured-grid, Z, 2Z.
std::vector<std::string> example_names();
/// Dispatches on `name`; 1-D examples use the first axis of `window`.
/// Throws on unknown names and on windows that contain no point.
PointCloud example_cloud(const std::string& name, const RationalBox& window);

}  // namespace aperiodic
