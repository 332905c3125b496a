#pragma once

#include "aperiodic/basis.hpp"
#include "aperiodic/box.hpp"
#include "aperiodic/group_point.hpp"
#include "aperiodic/laurent_poly.hpp"
#include "aperiodic/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace aperiodic {

/// Finite set of values a configuration may take.
class Alphabet {
public:
    /// Rejects an empty list and duplicate values.
    static Alphabet make(std::vector<Rational> values);

    const std::vector<Rational>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool contains(const Rational& a) const;
    Rational max_abs() const;
    bool is_integral() const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    explicit Alphabet(std::vector<Rational> sorted) : values_(std::move(sorted)) {}
    std::vector<Rational> values_;
};

/// Immutable map from group points of a basis to exact rationals.
///
/// Rule-based kinds are defined on the whole group; explicit-window
/// configurations only on the points whose embedding lies in their window.
class Configuration {
public:
    class Impl {
    public:
        virtual ~Impl() = default;
        virtual Rational eval(const GroupPoint& u) const = 0;
        virtual bool in_domain(const GroupPoint& /*u*/) const { return true; }
        virtual std::string kind() const = 0;
        /// Integer period vectors spanning a full-rank lattice, when known.
        virtual std::optional<std::vector<GroupPoint>> periods() const { return std::nullopt; }
    };

    Configuration(ExponentBasis basis, std::shared_ptr<const Impl> impl, std::optional<Alphabet> alphabet);

    const ExponentBasis& basis() const noexcept { return basis_; }
    std::size_t rank() const { return basis_.rank(); }
    const std::optional<Alphabet>& alphabet() const noexcept { return alphabet_; }
    std::string kind() const { return impl_->kind(); }
    std::optional<std::vector<GroupPoint>> periods() const { return impl_->periods(); }

    /// Same map with a declared alphabet (trusted, not checked).
    Configuration with_alphabet(Alphabet alphabet) const { return Configuration(basis_, impl_, std::move(alphabet)); }

    bool in_domain(const GroupPoint& u) const;
    /// Throws DomainError outside the domain and ContractError on a rank mismatch.
    Rational eval(const GroupPoint& u) const;

private:
    ExponentBasis basis_;
    std::shared_ptr<const Impl> impl_;
    std::optional<Alphabet> alphabet_;
};

/// c == value everywhere.
Configuration constant_config(const ExponentBasis& basis, const Rational& value);

/// Values given at finitely many points; 0 at every other point of the domain.
/// The domain is the set of group points whose embedding lies in `window`.
Configuration explicit_config(const ExponentBasis& basis, std::map<GroupPoint, Rational> values, RationalBox window);

/// Periodic configuration: `periods` must span a full-rank sublattice of Z^m.
/// `cell` gives values on any representatives; they are reduced modulo the
/// lattice, and conflicting values are rejected. Unlisted classes are 0.
Configuration periodic_config(const ExponentBasis& basis, std::vector<GroupPoint> periods,
                              const std::map<GroupPoint, Rational>& cell);

/// c(i,j) = floor(z1+z2+(i+j)a) - floor(z1+i a) - floor(z2+j a) on Z^2; rational a != 0.
Configuration torus_config(const Rational& z1, const Rational& z2, const Rational& alpha);

/// c(u) = scale * floor(beta + a.u) where a holds one rational per group coordinate.
Configuration floor_config(const ExponentBasis& basis, const Rational& beta, std::vector<Rational> a,
                           const Rational& scale = 1);

/// Indicator of the subgroup spanned by the generators listed in `generators`:
/// 1 when every other coordinate is zero.
Configuration subgroup_indicator(const ExponentBasis& basis, std::vector<std::size_t> generators);

/// sum_i scales[i] * parts[i]; `scales` empty means all ones.
Configuration sum_config(std::vector<Configuration> parts, std::vector<Rational> scales = {});

/// translate(c, t)(u) = c(u - t).
Configuration translate(const Configuration& c, const GroupPoint& t);

/// (f c)(u) = sum_v f_v c(u - v), evaluated lazily.
Configuration apply_poly(const LaurentPoly& f, const Configuration& c);

/// Coset representatives of Z^m modulo the lattice spanned by `periods`,
/// one per class, taken from the Hermite normal form box.
std::vector<GroupPoint> fundamental_domain(const std::vector<GroupPoint>& periods);

}  // namespace aperiodic
