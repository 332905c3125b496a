#include "aperiodic/configuration.hpp"

#include "aperiodic/error.hpp"
#include "aperiodic/linalg.hpp"

#include <algorithm>
#include <set>

namespace aperiodic {

Alphabet Alphabet::make(std::vector<Rational> values) {
    if (values.empty()) throw ContractError("alphabet must be non-empty");
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
        throw ContractError("alphabet contains duplicate values");
    }
    return Alphabet(std::move(values));
}

bool Alphabet::contains(const Rational& a) const { return std::binary_search(values_.begin(), values_.end(), a); }

Rational Alphabet::max_abs() const { return std::max(abs(values_.front()), abs(values_.back())); }

bool Alphabet::is_integral() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return is_integer(q); });
}

Configuration::Configuration(ExponentBasis basis, std::shared_ptr<const Impl> impl, std::optional<Alphabet> alphabet)
    : basis_(std::move(basis)), impl_(std::move(impl)), alphabet_(std::move(alphabet)) {
    if (!impl_) throw ContractError("configuration without an implementation");
}

bool Configuration::in_domain(const GroupPoint& u) const { return u.rank() == rank() && impl_->in_domain(u); }

Rational Configuration::eval(const GroupPoint& u) const {
    if (u.rank() != rank()) {
        throw ContractError("point " + u.to_string() + " does not match configuration rank " + std::to_string(rank()));
    }
    if (!impl_->in_domain(u)) throw DomainError("point " + u.to_string() + " is outside the configuration domain");
    return impl_->eval(u);
}

namespace {

std::optional<Alphabet> alphabet_from(const std::set<Rational>& values) {
    if (values.empty()) return std::nullopt;
    return Alphabet::make(std::vector<Rational>(values.begin(), values.end()));
}

// Reduction modulo a full-rank lattice through its Hermite normal form.
class Lattice {
public:
    explicit Lattice(const std::vector<GroupPoint>& periods) {
        if (periods.empty()) throw ContractError("periodic configuration needs period vectors");
        const std::size_t m = periods.front().rank();
        IntMatrix rows;
        for (const auto& p : periods) {
            if (p.rank() != m) throw ContractError("period vectors have different ranks");
            rows.push_back(p.coords());
        }
        hnf_ = hermite_normal_form(std::move(rows));
        if (hnf_.size() != m) throw ContractError("period vectors do not span a full-rank lattice");
        for (std::size_t i = 0; i < m; ++i) {
            if (hnf_[i][i] == 0) throw ContractError("period vectors do not span a full-rank lattice");
        }
    }

    GroupPoint reduce(GroupPoint u) const {
        for (std::size_t i = 0; i < hnf_.size(); ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), u[i].get_mpz_t(), hnf_[i][i].get_mpz_t());
            if (q == 0) continue;
            for (std::size_t k = i; k < hnf_.size(); ++k) u[k] -= q * hnf_[i][k];
        }
        return u;
    }

    IntBox cell_box() const {
        std::vector<Integer> lo(hnf_.size(), Integer(0));
        std::vector<Integer> hi;
        for (std::size_t i = 0; i < hnf_.size(); ++i) hi.push_back(hnf_[i][i] - 1);
        return IntBox(std::move(lo), std::move(hi));
    }

private:
    IntMatrix hnf_;
};

class ConstantImpl : public Configuration::Impl {
public:
    ConstantImpl(Rational value, std::size_t rank) : value_(std::move(value)), rank_(rank) {}
    Rational eval(const GroupPoint&) const override { return value_; }
    std::string kind() const override { return "constant"; }
    std::optional<std::vector<GroupPoint>> periods() const override {
        std::vector<GroupPoint> out;
        for (std::size_t i = 0; i < rank_; ++i) out.push_back(GroupPoint::unit(rank_, i));
        return out;
    }

private:
    Rational value_;
    std::size_t rank_;
};

class ExplicitImpl : public Configuration::Impl {
public:
    ExplicitImpl(ExponentBasis basis, std::map<GroupPoint, Rational> values, RationalBox window)
        : basis_(std::move(basis)), values_(std::move(values)), window_(std::move(window)) {}
    Rational eval(const GroupPoint& u) const override {
        const auto it = values_.find(u);
        return it == values_.end() ? Rational(0) : it->second;
    }
    bool in_domain(const GroupPoint& u) const override { return window_.contains(basis_.embed(u)); }
    std::string kind() const override { return "explicit"; }

private:
    ExponentBasis basis_;
    std::map<GroupPoint, Rational> values_;
    RationalBox window_;
};

class PeriodicImpl : public Configuration::Impl {
public:
    PeriodicImpl(std::vector<GroupPoint> periods, Lattice lattice, std::map<GroupPoint, Rational> reduced)
        : periods_(std::move(periods)), lattice_(std::move(lattice)), reduced_(std::move(reduced)) {}
    Rational eval(const GroupPoint& u) const override {
        const auto it = reduced_.find(lattice_.reduce(u));
        return it == reduced_.end() ? Rational(0) : it->second;
    }
    std::string kind() const override { return "periodic"; }
    std::optional<std::vector<GroupPoint>> periods() const override { return periods_; }

private:
    std::vector<GroupPoint> periods_;
    Lattice lattice_;
    std::map<GroupPoint, Rational> reduced_;
};

class TorusImpl : public Configuration::Impl {
public:
    TorusImpl(Rational z1, Rational z2, Rational alpha) : z1_(z1), z2_(z2), alpha_(alpha) {}
    Rational eval(const GroupPoint& u) const override {
        const Rational i(u[0]);
        const Rational j(u[1]);
        return Rational(floor(z1_ + z2_ + (i + j) * alpha_) - floor(z1_ + i * alpha_) - floor(z2_ + j * alpha_));
    }
    std::string kind() const override { return "torus"; }
    std::optional<std::vector<GroupPoint>> periods() const override {
        const Integer q = alpha_.get_den();
        return std::vector<GroupPoint>{GroupPoint({q, Integer(0)}), GroupPoint({Integer(0), q})};
    }

private:
    Rational z1_;
    Rational z2_;
    Rational alpha_;
};

class FloorImpl : public Configuration::Impl {
public:
    FloorImpl(Rational beta, std::vector<Rational> a, Rational scale)
        : beta_(std::move(beta)), a_(std::move(a)), scale_(std::move(scale)) {}
    Rational eval(const GroupPoint& u) const override {
        Rational s = beta_;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (u[i] != 0 && a_[i] != 0) s += a_[i] * Rational(u[i]);
        }
        return scale_ * Rational(floor(s));
    }
    std::string kind() const override { return "floor"; }

private:
    Rational beta_;
    std::vector<Rational> a_;
    Rational scale_;
};

class SubgroupImpl : public Configuration::Impl {
public:
    SubgroupImpl(std::size_t rank, std::vector<std::size_t> generators) : outside_(rank, true) {
        for (std::size_t g : generators) outside_[g] = false;
    }
    Rational eval(const GroupPoint& u) const override {
        for (std::size_t i = 0; i < outside_.size(); ++i) {
            if (outside_[i] && u[i] != 0) return 0;
        }
        return 1;
    }
    std::string kind() const override { return "subgroup"; }

private:
    std::vector<bool> outside_;
};

class SumImpl : public Configuration::Impl {
public:
    SumImpl(std::vector<Configuration> parts, std::vector<Rational> scales)
        : parts_(std::move(parts)), scales_(std::move(scales)) {}
    Rational eval(const GroupPoint& u) const override {
        Rational s = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i) s += scales_[i] * parts_[i].eval(u);
        return s;
    }
    bool in_domain(const GroupPoint& u) const override {
        return std::all_of(parts_.begin(), parts_.end(), [&](const Configuration& c) { return c.in_domain(u); });
    }
    std::string kind() const override { return "sum"; }
    std::optional<std::vector<GroupPoint>> periods() const override {
        auto first = parts_.front().periods();
        if (!first) return std::nullopt;
        for (std::size_t i = 1; i < parts_.size(); ++i) {
            if (parts_[i].periods() != first) return std::nullopt;
        }
        return first;
    }

private:
    std::vector<Configuration> parts_;
    std::vector<Rational> scales_;
};

class TranslateImpl : public Configuration::Impl {
public:
    TranslateImpl(Configuration inner, GroupPoint t) : inner_(std::move(inner)), t_(std::move(t)) {}
    Rational eval(const GroupPoint& u) const override { return inner_.eval(u - t_); }
    bool in_domain(const GroupPoint& u) const override { return inner_.in_domain(u - t_); }
    std::string kind() const override { return "translate"; }
    std::optional<std::vector<GroupPoint>> periods() const override { return inner_.periods(); }

private:
    Configuration inner_;
    GroupPoint t_;
};

class PolyImpl : public Configuration::Impl {
public:
    PolyImpl(LaurentPoly f, Configuration inner) : f_(std::move(f)), inner_(std::move(inner)) {}
    Rational eval(const GroupPoint& u) const override {
        Rational s = 0;
        for (const auto& [v, a] : f_.terms()) s += a * inner_.eval(u - v);
        return s;
    }
    bool in_domain(const GroupPoint& u) const override {
        for (const auto& [v, a] : f_.terms()) {
            if (!inner_.in_domain(u - v)) return false;
        }
        return true;
    }
    std::string kind() const override { return "poly-applied"; }
    std::optional<std::vector<GroupPoint>> periods() const override { return inner_.periods(); }

private:
    LaurentPoly f_;
    Configuration inner_;
};

}  // namespace

Configuration constant_config(const ExponentBasis& basis, const Rational& value) {
    return Configuration(basis, std::make_shared<ConstantImpl>(value, basis.rank()), Alphabet::make({value}));
}

Configuration explicit_config(const ExponentBasis& basis, std::map<GroupPoint, Rational> values, RationalBox window) {
    if (window.dim() != basis.dim()) throw ContractError("window dimension does not match the basis");
    std::set<Rational> alpha{Rational(0)};
    for (auto it = values.begin(); it != values.end();) {
        if (it->first.rank() != basis.rank()) throw ContractError("point " + it->first.to_string() + " has wrong rank");
        if (!window.contains(basis.embed(it->first))) {
            throw ContractError("point " + it->first.to_string() + " lies outside the window");
        }
        if (it->second == 0) {
            it = values.erase(it);
            continue;
        }
        alpha.insert(it->second);
        ++it;
    }
    return Configuration(basis, std::make_shared<ExplicitImpl>(basis, std::move(values), std::move(window)),
                         alphabet_from(alpha));
}

Configuration periodic_config(const ExponentBasis& basis, std::vector<GroupPoint> periods,
                              const std::map<GroupPoint, Rational>& cell) {
    for (const auto& p : periods) {
        if (p.rank() != basis.rank()) throw ContractError("period " + p.to_string() + " has wrong rank");
    }
    Lattice lattice(periods);
    std::map<GroupPoint, Rational> reduced;
    std::set<Rational> alpha;
    for (const auto& [u, value] : cell) {
        if (u.rank() != basis.rank()) throw ContractError("cell point " + u.to_string() + " has wrong rank");
        const GroupPoint r = lattice.reduce(u);
        const auto [it, inserted] = reduced.emplace(r, value);
        if (!inserted && it->second != value) {
            throw ContractError("cell points " + u.to_string() + " and " + r.to_string() +
                                " are congruent but carry different values");
        }
    }
    for (auto it = reduced.begin(); it != reduced.end();) {
        alpha.insert(it->second);
        it = it->second == 0 ? reduced.erase(it) : std::next(it);
    }
    if (reduced.size() < lattice.cell_box().count()) alpha.insert(Rational(0));
    return Configuration(basis, std::make_shared<PeriodicImpl>(std::move(periods), lattice, std::move(reduced)),
                         alphabet_from(alpha));
}

Configuration torus_config(const Rational& z1, const Rational& z2, const Rational& alpha) {
    if (alpha == 0) throw ContractError("torus_config: alpha must be nonzero");
    return Configuration(ExponentBasis::standard(2), std::make_shared<TorusImpl>(z1, z2, alpha),
                         Alphabet::make({0, 1}));
}

Configuration floor_config(const ExponentBasis& basis, const Rational& beta, std::vector<Rational> a,
                           const Rational& scale) {
    if (a.size() != basis.rank()) throw ContractError("floor_config: one slope per group coordinate required");
    return Configuration(basis, std::make_shared<FloorImpl>(beta, std::move(a), scale), std::nullopt);
}

Configuration subgroup_indicator(const ExponentBasis& basis, std::vector<std::size_t> generators) {
    for (std::size_t g : generators) {
        if (g >= basis.rank()) throw ContractError("subgroup_indicator: generator index out of range");
    }
    return Configuration(basis, std::make_shared<SubgroupImpl>(basis.rank(), std::move(generators)),
                         Alphabet::make({0, 1}));
}

Configuration sum_config(std::vector<Configuration> parts, std::vector<Rational> scales) {
    if (parts.empty()) throw ContractError("sum_config: no parts");
    if (scales.empty()) scales.assign(parts.size(), Rational(1));
    if (scales.size() != parts.size()) throw ContractError("sum_config: one scale per part required");
    for (const auto& p : parts) require_same_basis(parts.front().basis(), p.basis(), "sum_config");

    std::optional<Alphabet> alphabet;
    std::set<Rational> acc{Rational(0)};
    bool finite = true;
    for (std::size_t i = 0; i < parts.size() && finite; ++i) {
        if (!parts[i].alphabet()) {
            finite = false;
            break;
        }
        std::set<Rational> next;
        for (const auto& a : acc) {
            for (const auto& b : parts[i].alphabet()->values()) next.insert(a + scales[i] * b);
        }
        acc = std::move(next);
        if (acc.size() > 4096) finite = false;
    }
    if (finite) alphabet = alphabet_from(acc);
    ExponentBasis basis = parts.front().basis();
    return Configuration(basis, std::make_shared<SumImpl>(std::move(parts), std::move(scales)), std::move(alphabet));
}

Configuration translate(const Configuration& c, const GroupPoint& t) {
    if (t.rank() != c.rank()) throw ContractError("translate: vector has wrong rank");
    return Configuration(c.basis(), std::make_shared<TranslateImpl>(c, t), c.alphabet());
}

Configuration apply_poly(const LaurentPoly& f, const Configuration& c) {
    require_same_basis(f.basis(), c.basis(), "apply_poly");
    return Configuration(c.basis(), std::make_shared<PolyImpl>(f, c), std::nullopt);
}

std::vector<GroupPoint> fundamental_domain(const std::vector<GroupPoint>& periods) {
    return Lattice(periods).cell_box().points();
}

}  // namespace aperiodic
