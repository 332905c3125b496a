#pragma once

#include "aperiodic/box.hpp"
#include "aperiodic/configuration.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aperiodic {

/// A function on the points of a box, possibly undefined at some of them.
class WindowFunction {
public:
    WindowFunction() = default;
    /// Everywhere undefined on `box`.
    explicit WindowFunction(IntBox box);

    /// c sampled on `box`; points outside the domain of c stay undefined.
    static WindowFunction sample(const Configuration& c, const IntBox& box);

    const IntBox& box() const noexcept { return box_; }
    bool defined(const GroupPoint& u) const;
    /// Throws DomainError when u is outside the box or undefined.
    const Rational& at(const GroupPoint& u) const;
    void set(const GroupPoint& u, Rational value);

    /// Largest box box().shrunk(k,...,k) on which every point is defined.
    std::optional<IntBox> defined_core() const;
    /// Copy restricted to `sub` (which must lie inside the box).
    WindowFunction restricted(const IntBox& sub) const;

    /// (X^v - 1) applied: u -> f(u - v) - f(u), defined where both terms are.
    WindowFunction difference(const GroupPoint& v) const;

private:
    std::optional<std::size_t> index(const GroupPoint& u) const;

    IntBox box_;
    std::vector<long> stride_;
    std::vector<Rational> values_;
    std::vector<char> mask_;
};

struct IntegrationResult {
    /// Defined on the points reachable from the seed lines.
    WindowFunction c;
    /// Largest centered sub-box on which c is everywhere defined.
    std::optional<IntBox> inner;
    /// Both identities hold exactly on `inner`.
    bool verified = false;
    std::string diagnostic;
};

/// Solves (X^{v1} - 1) c = c' and (X^{v2} - 1) c = 0 on the box of c'.
/// Every coset of Z v1 + Z v2 meeting the box is seeded with c = 0 on the line
/// z + Z v2, z the coset point nearest the box center (ties broken
/// lexicographically), then c(u - v1) = c(u) + c'(u) is propagated along v1.
IntegrationResult integrate_step(const WindowFunction& c_prime, const GroupPoint& v1, const GroupPoint& v2);

struct DecompositionComponent {
    GroupPoint direction;
    /// Values on the inner window.
    WindowFunction values;
};

struct DecompositionWitness {
    std::vector<DecompositionComponent> components;
    IntBox outer_window;
    std::optional<IntBox> inner_window;
    /// Per-axis distance lost between the outer and inner window.
    std::vector<Integer> margin;
    /// Each component is killed by its difference polynomial and the components
    /// sum to c, exactly, at every point of the inner window.
    bool certified = false;
    std::string diagnostic;
};

/// Periodic decomposition c = c_1 + ... + c_m with (X^{v_i} - 1) c_i = 0, built by
/// induction on m: decompose (X^{v_m} - 1) c along v_1..v_{m-1}, integrate each
/// piece against v_m, and let c_m take up the rest. Directions must be pairwise
/// independent; the product of their difference polynomials should annihilate c.
DecompositionWitness decompose(const Configuration& c, const std::vector<GroupPoint>& directions,
                               const IntBox& window);

/// Re-checks a witness against c on its inner window.
bool check_decomposition(const DecompositionWitness& w, const Configuration& c);

/// The smallest outer window whose decomposition would keep `inner`, using the
/// margin of an earlier run.
IntBox required_window(const IntBox& inner, const std::vector<Integer>& margin);

}  // namespace aperiodic
