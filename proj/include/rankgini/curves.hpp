#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rankgini/core.hpp"
#include "rankgini/error.hpp"
#include "rankgini/ordering.hpp"
#include "rankgini/summation.hpp"

namespace rankgini {

struct CurvePoint {
    double alpha = 0.0;
    double value = 0.0;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Piecewise-linear curve on [0,1] given by its corners. Alphas strictly
/// increase from exactly 0 to exactly 1; the values at the endpoints are
/// exactly 0 and 1.
class Curve {
public:
    /// Validating constructor for externally supplied corner sets.
    static Curve from_corners(std::vector<CurvePoint> corners) {
        if (corners.size() < 2) throw Error(ErrorKind::BadParams, "a curve needs at least two corners");
        if (corners.front() != CurvePoint{0.0, 0.0} || corners.back() != CurvePoint{1.0, 1.0}) {
            throw Error(ErrorKind::BadParams, "a curve must start at (0,0) and end at (1,1)");
        }
        for (std::size_t i = 1; i < corners.size(); ++i) {
            if (!(corners[i].alpha > corners[i - 1].alpha)) {
                throw Error(ErrorKind::BadParams,
                            "curve alphas must be strictly increasing (corner " + std::to_string(i) + ")");
            }
        }
        return Curve(std::move(corners));
    }

    static Curve diagonal() { return Curve({{0.0, 0.0}, {1.0, 1.0}}); }

    std::span<const CurvePoint> corners() const noexcept { return corners_; }
    std::size_t size() const noexcept { return corners_.size(); }
    const CurvePoint& operator[](std::size_t i) const { return corners_[i]; }

    friend bool operator==(const Curve&, const Curve&) = default;

private:
    explicit Curve(std::vector<CurvePoint> corners) : corners_(std::move(corners)) {}

    friend Curve accumulate_curve(const Sample&, const Permutation&);
    friend Curve cap_curve_mid(const Sample&);

    std::vector<CurvePoint> corners_;
};

/// Corner set of cumulative weight share against cumulative weighted
/// response share, taking records in the given order. (0,0) is prepended
/// and the final corner is pinned to (1,1). A common weight cancels, so equal
/// weights are accumulated as ones and give exactly the unit-weight corners.
inline Curve accumulate_curve(const Sample& sample, const Permutation& order) {
    const auto obs = sample.observations();
    const bool equal_weights = sample.all_weights_equal();
    double tw = sample.total_weight();
    double twr = sample.total_weighted_response();
    if (equal_weights) {
        CompensatedSum total;
        for (const auto& o : obs) total += o.response;
        tw = static_cast<double>(obs.size());
        twr = total.value();
    }

    std::vector<CurvePoint> corners;
    corners.reserve(order.size() + 1);
    corners.push_back({0.0, 0.0});
    CompensatedSum cum_w;
    CompensatedSum cum_wy;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto& o = obs[order[k]];
        const double w = equal_weights ? 1.0 : o.weight;
        cum_w += w;
        cum_wy += w * o.response;
        corners.push_back({cum_w.value() / tw, cum_wy.value() / twr});
    }
    corners.back() = {1.0, 1.0};
    return Curve(std::move(corners));
}

/// Modified empirical Lorenz curve: responses accumulated in decreasing order.
inline Curve lorenz_curve(const Sample& sample) {
    return accumulate_curve(sample, order_responses_desc(sample));
}

/// Empirical cumulative accuracy profile with the given tie suborder.
inline Curve cap_curve(const Sample& sample, TieDirection direction) {
    return accumulate_curve(sample, order_tied(sample, direction));
}

/// Pointwise average of the best and worst CAP on the grid i/n. Only defined
/// when every weight is the same; otherwise the two corner grids differ.
inline Curve cap_curve_mid(const Sample& sample) {
    if (!sample.all_weights_equal()) {
        throw Error(ErrorKind::UnequalWeights,
                    "the mid CAP needs equal weights; use the mid area instead");
    }
    const auto [best_order, worst_order] = order_tied_both(sample);
    const Curve best = accumulate_curve(sample, best_order);
    const Curve worst = accumulate_curve(sample, worst_order);
    const std::size_t n = sample.size();
    std::vector<CurvePoint> corners(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        corners[i] = {static_cast<double>(i) / static_cast<double>(n),
                      0.5 * (best[i].value + worst[i].value)};
    }
    corners.back() = {1.0, 1.0};
    return Curve(std::move(corners));
}

/// Signed area between the curve and the diagonal, by the trapezoid rule.
/// Negative when the curve runs below the diagonal.
inline double area_above_diagonal(const Curve& curve) {
    const auto c = curve.corners();
    CompensatedSum twice_area;
    for (std::size_t i = 1; i < c.size(); ++i) {
        twice_area += (c[i].value + c[i - 1].value) * (c[i].alpha - c[i - 1].alpha);
    }
    return 0.5 * twice_area.value() - 0.5;
}

/// Linear interpolation between the bracketing corners.
inline double evaluate(const Curve& curve, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw Error(ErrorKind::OutOfRange, "alpha must lie in [0,1]");
    }
    const auto c = curve.corners();
    auto hi = std::lower_bound(c.begin(), c.end(), alpha,
                               [](const CurvePoint& p, double a) { return p.alpha < a; });
    if (hi->alpha == alpha) return hi->value;
    const auto lo = hi - 1;
    const double t = (alpha - lo->alpha) / (hi->alpha - lo->alpha);
    return lo->value + t * (hi->value - lo->value);
}

struct CurveAreas {
    double lorenz = 0.0;   ///< B
    double best = 0.0;     ///< A with the best tie suborder
    double worst = 0.0;    ///< A with the worst tie suborder
    double mid = 0.0;      ///< (best + worst) / 2
};

inline CurveAreas curve_areas(const Sample& sample) {
    CurveAreas areas;
    areas.lorenz = area_above_diagonal(lorenz_curve(sample));
    const auto [best, worst] = order_tied_both(sample);
    areas.best = area_above_diagonal(accumulate_curve(sample, best));
    areas.worst = area_above_diagonal(accumulate_curve(sample, worst));
    areas.mid = 0.5 * (areas.best + areas.worst);
    return areas;
}

} // namespace rankgini
