#pragma once

#include "aperiodic/rational.hpp"

#include <cmath>
#include <map>
#include <vector>

namespace aperiodic::detail {

// Uniform bucket grid over embedded points. Bucketing uses doubles; callers
// confirm every candidate with exact arithmetic, and queries pad by one cell
// so rounding can only add candidates.
class NeighborIndex {
public:
    NeighborIndex(const std::vector<RationalVector>& points, double cell) : cell_(cell > 0 ? cell : 1.0) {
        coords_.reserve(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
            std::vector<double> x;
            for (const auto& q : points[i]) x.push_back(to_double(q));
            buckets_[key(x)].push_back(i);
            coords_.push_back(std::move(x));
        }
    }

    // Indices of points whose double coordinates are within `radius` (max-norm,
    // padded) of `center`.
    template <typename Visit>
    void candidates(const RationalVector& center, const Rational& radius, Visit&& visit) const {
        if (coords_.empty()) return;
        std::vector<double> c;
        for (const auto& q : center) c.push_back(to_double(q));
        const double r = to_double(radius);
        std::vector<long> lo;
        std::vector<long> hi;
        for (double x : c) {
            lo.push_back(static_cast<long>(std::floor((x - r) / cell_)) - 1);
            hi.push_back(static_cast<long>(std::floor((x + r) / cell_)) + 1);
        }
        std::vector<long> k = lo;
        while (true) {
            const auto it = buckets_.find(k);
            if (it != buckets_.end()) {
                for (std::size_t i : it->second) visit(i);
            }
            std::size_t d = 0;
            while (d < k.size()) {
                if (k[d] < hi[d]) {
                    ++k[d];
                    break;
                }
                k[d] = lo[d];
                ++d;
            }
            if (d == k.size()) return;
        }
    }

private:
    std::vector<long> key(const std::vector<double>& x) const {
        std::vector<long> k;
        for (double v : x) k.push_back(static_cast<long>(std::floor(v / cell_)));
        return k;
    }

    double cell_;
    std::vector<std::vector<double>> coords_;
    std::map<std::vector<long>, std::vector<std::size_t>> buckets_;
};

}  // namespace aperiodic::detail
