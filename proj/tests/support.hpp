#pragma once

// Test-only generators and brute-force references shared by the unit and
// acceptance suites.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "rankgini/rankgini.hpp"

namespace rankgini::testkit {

struct SampleShape {
    std::size_t n = 20;
    bool heavy_ties = false;  ///< predictions from a handful of levels
    bool weighted = false;    ///< random positive weights instead of ones
};

/// Random valid sample. Responses are non-negative with some exact repeats
/// so that ties inside prediction ties occur as well.
inline Sample random_sample(std::mt19937_64& rng, const SampleShape& shape) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> level(0, 4);
    std::vector<WeightedObservation> obs(shape.n);
    for (;;) {
        for (auto& o : obs) {
            o.response = unit(rng) < 0.2 ? std::floor(unit(rng) * 4.0) : std::exp(2.0 * unit(rng)) - 1.0;
            o.prediction = shape.heavy_ties ? static_cast<double>(level(rng)) : unit(rng) * 10.0 - 5.0;
            o.weight = shape.weighted ? 0.05 + 3.0 * unit(rng) : 1.0;
        }
        const bool distinct = std::any_of(obs.begin(), obs.end(),
                                          [&](const WeightedObservation& o) { return o.response != obs[0].response; });
        if (distinct) return build_sample(obs);
    }
}

/// Ordering as two stable sorts: responses first, then predictions
/// descending (the suborder survives the second pass).
inline std::vector<std::size_t> two_pass_order(const Sample& s, TieDirection direction) {
    std::vector<std::size_t> idx(s.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return direction == TieDirection::Best ? s[a].response > s[b].response : s[a].response < s[b].response;
    });
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return s[a].prediction > s[b].prediction; });
    return idx;
}

inline std::vector<double> ordered_responses(const Sample& s, const Permutation& p) {
    std::vector<double> out;
    for (std::size_t k = 0; k < p.size(); ++k) out.push_back(s[p[k]].response);
    return out;
}

/// Rebuilds a sample with modified columns.
template <class Fn>
Sample transform(const Sample& s, Fn&& fn, const BuildOptions& options = {}) {
    std::vector<WeightedObservation> obs(s.observations().begin(), s.observations().end());
    for (auto& o : obs) fn(o);
    return build_sample(std::move(obs), options);
}

/// Replaces predictions by their dense rank (0 = smallest).
inline Sample rank_predictions(const Sample& s) {
    std::vector<double> levels = s.predictions();
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return transform(s, [&](WeightedObservation& o) {
        o.prediction = static_cast<double>(std::lower_bound(levels.begin(), levels.end(), o.prediction) - levels.begin());
    });
}

inline double relative_gap(double a, double b, double scale) {
    return std::abs(a - b) / std::max(scale, std::numeric_limits<double>::min());
}

} // namespace rankgini::testkit
