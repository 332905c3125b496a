#include "aperiodic/point_cloud.hpp"

#include "aperiodic/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace aperiodic {

PointCloud::PointCloud(ExponentBasis basis, std::vector<GroupPoint> points, RationalBox window,
                       std::vector<Rational> colors)
    : basis_(std::move(basis)), window_(std::move(window)) {
    if (window_.dim() != basis_.dim()) throw ContractError("window dimension does not match the basis");
    if (colors.empty()) colors.assign(points.size(), Rational(1));
    if (colors.size() != points.size()) throw ContractError("one color per point required");

    std::vector<RationalVector> emb;
    emb.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].rank() != basis_.rank()) {
            throw ContractError("point " + points[i].to_string() + " does not match the basis rank");
        }
        if (colors[i] == 0) throw ContractError("point " + points[i].to_string() + " has color 0");
        emb.push_back(basis_.embed(points[i]));
        if (!window_.contains(emb.back())) {
            throw ContractError("point " + points[i].to_string() + " lies outside the window " + window_.to_string());
        }
    }
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (emb[a] != emb[b]) return emb[a] < emb[b];
        return points[a] < points[b];
    });
    for (std::size_t i : order) {
        const auto [it, inserted] = index_.emplace(points[i], points_.size());
        if (!inserted) throw ContractError("duplicate point " + points[i].to_string());
        points_.push_back(points[i]);
        colors_.push_back(colors[i]);
        embedded_.push_back(emb[i]);
    }
}

std::optional<std::size_t> PointCloud::index_of(const GroupPoint& p) const {
    const auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool PointCloud::uncolored() const {
    return std::all_of(colors_.begin(), colors_.end(), [](const Rational& c) { return c == 1; });
}

Configuration PointCloud::as_configuration() const {
    std::map<GroupPoint, Rational> values;
    for (std::size_t i = 0; i < size(); ++i) values.emplace(points_[i], colors_[i]);
    return explicit_config(basis_, std::move(values), window_);
}

PointCloud PointCloud::minkowski_sum(const std::vector<GroupPoint>& f) const {
    if (f.empty()) throw ContractError("minkowski_sum: F must be non-empty");
    std::set<GroupPoint> out;
    for (const auto& s : points_) {
        for (const auto& t : f) {
            GroupPoint p = s + t;
            if (window_.contains(basis_.embed(p))) out.insert(std::move(p));
        }
    }
    return PointCloud(basis_, std::vector<GroupPoint>(out.begin(), out.end()), window_);
}

PointCloud PointCloud::restricted(const RationalBox& box) const {
    std::vector<GroupPoint> pts;
    std::vector<Rational> cols;
    for (std::size_t i = 0; i < size(); ++i) {
        if (box.contains(embedded_[i])) {
            pts.push_back(points_[i]);
            cols.push_back(colors_[i]);
        }
    }
    return PointCloud(basis_, std::move(pts), box, std::move(cols));
}

}  // namespace aperiodic
