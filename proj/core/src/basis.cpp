#include "aperiodic/basis.hpp"

#include "aperiodic/error.hpp"

#include <algorithm>

namespace aperiodic {

ExponentBasis ExponentBasis::standard(std::size_t dim) {
    if (dim == 0) throw ContractError("basis dimension must be positive");
    std::vector<RationalVector> gens(dim, RationalVector(dim, Rational(0)));
    for (std::size_t i = 0; i < dim; ++i) gens[i][i] = 1;
    return make(std::move(gens));
}

ExponentBasis ExponentBasis::make(std::vector<RationalVector> generators, std::vector<int> classes,
                                  std::vector<std::string> labels) {
    if (generators.empty()) throw ContractError("basis needs at least one generator");
    const std::size_t dim = generators.front().size();
    if (dim == 0) throw ContractError("basis dimension must be positive");
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].size() != dim) throw ContractError("basis generators have different dimensions");
        if (is_zero(generators[i])) {
            throw ContractError("basis generator " + std::to_string(i) + " is the zero vector");
        }
    }
    if (classes.empty()) classes.assign(generators.size(), 0);
    if (classes.size() != generators.size()) {
        throw ContractError("independence classes must list one class per generator");
    }
    if (labels.empty()) labels.assign(generators.size(), std::string());
    if (labels.size() != generators.size()) throw ContractError("one label per generator required");
    auto data = std::make_shared<Data>();
    data->dim = dim;
    data->generators = std::move(generators);
    data->classes = std::move(classes);
    data->labels = std::move(labels);
    return ExponentBasis(std::move(data));
}

RationalVector ExponentBasis::embed(const GroupPoint& p) const {
    if (p.rank() != rank()) {
        throw ContractError("group point " + p.to_string() + " has rank " + std::to_string(p.rank()) +
                            ", basis has rank " + std::to_string(rank()));
    }
    RationalVector out(dim(), Rational(0));
    for (std::size_t i = 0; i < rank(); ++i) {
        if (p[i] == 0) continue;
        const Rational k(p[i]);
        const auto& g = data_->generators[i];
        for (std::size_t j = 0; j < dim(); ++j) out[j] += k * g[j];
    }
    return out;
}

std::vector<int> ExponentBasis::classes_used(const GroupPoint& p) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < p.rank(); ++i) {
        if (p[i] != 0) out.push_back(class_of(i));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool ExponentBasis::is_standard() const {
    if (rank() != dim()) return false;
    for (std::size_t i = 0; i < rank(); ++i) {
        for (std::size_t j = 0; j < dim(); ++j) {
            if (data_->generators[i][j] != (i == j ? 1 : 0)) return false;
        }
    }
    return true;
}

bool operator==(const ExponentBasis& a, const ExponentBasis& b) {
    if (a.data_ == b.data_) return true;
    return a.data_->dim == b.data_->dim && a.data_->generators == b.data_->generators &&
           a.data_->classes == b.data_->classes;
}

void require_same_basis(const ExponentBasis& a, const ExponentBasis& b, const char* operation) {
    if (!(a == b)) throw ContractError(std::string(operation) + ": basis mismatch");
}

}  // namespace aperiodic
