#pragma once

#include "aperiodic/group_point.hpp"
#include "aperiodic/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace aperiodic {

/// Generators b_1..b_m of a finitely generated subgroup of R^d.
///
/// Every position and every exponent is an integer vector over the generators.
/// Generators in different independence classes are declared rationally
/// independent; that declaration is trusted, never computed. Irrational
/// generators are stored as rational surrogates and only feed geometric queries.
class ExponentBasis {
public:
    /// The standard basis of Z^d embedded in R^d.
    static ExponentBasis standard(std::size_t dim);

    /// `classes[i]` is the independence class id of generator i. An empty
    /// `classes` puts every generator into class 0.
    static ExponentBasis make(std::vector<RationalVector> generators, std::vector<int> classes = {},
                              std::vector<std::string> labels = {});

    std::size_t rank() const { return data_->generators.size(); }
    std::size_t dim() const { return data_->dim; }
    const RationalVector& generator(std::size_t i) const { return data_->generators.at(i); }
    const std::vector<RationalVector>& generators() const { return data_->generators; }
    int class_of(std::size_t i) const { return data_->classes.at(i); }
    const std::vector<int>& classes() const { return data_->classes; }
    /// Optional human-readable generator names ("1", "pi", ...); may be empty strings.
    const std::string& label(std::size_t i) const { return data_->labels.at(i); }

    RationalVector embed(const GroupPoint& p) const;

    /// Independence classes touched by the nonzero coordinates of p.
    std::vector<int> classes_used(const GroupPoint& p) const;

    bool is_standard() const;

    friend bool operator==(const ExponentBasis& a, const ExponentBasis& b);

private:
    struct Data {
        std::size_t dim = 0;
        std::vector<RationalVector> generators;
        std::vector<int> classes;
        std::vector<std::string> labels;
    };

    explicit ExponentBasis(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

    std::shared_ptr<const Data> data_;
};

void require_same_basis(const ExponentBasis& a, const ExponentBasis& b, const char* operation);

}  // namespace aperiodic
