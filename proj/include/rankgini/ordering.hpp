#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string_view>
#include <utility>
#include <vector>

#include "rankgini/core.hpp"

namespace rankgini {

/// Resolution of prediction ties: Best puts the larger responses first
/// inside a tie, Worst the smaller ones.
enum class TieDirection { Best, Worst };

constexpr std::string_view to_string(TieDirection d) noexcept {
    return d == TieDirection::Best ? "best" : "worst";
}

/// Bijection on {0, ..., n-1}; position k holds the record index placed k-th.
struct Permutation {
    std::vector<std::size_t> indices;

    std::size_t size() const noexcept { return indices.size(); }
    std::size_t operator[](std::size_t k) const { return indices[k]; }
    friend bool operator==(const Permutation&, const Permutation&) = default;
};

namespace detail {

inline std::vector<std::size_t> identity(std::size_t n) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return idx;
}

// Sorting contiguous keys is several times faster than sorting indices that
// point back into the observations.
struct TieKey {
    double prediction;
    double response;
    std::size_t index;
};

inline Permutation best_order(const Sample& sample) {
    const auto obs = sample.observations();
    std::vector<TieKey> keys(obs.size());
    for (std::size_t i = 0; i < obs.size(); ++i) keys[i] = {obs[i].prediction, obs[i].response, i};
    std::sort(keys.begin(), keys.end(), [](const TieKey& a, const TieKey& b) {
        if (a.prediction != b.prediction) return a.prediction > b.prediction;
        if (a.response != b.response) return a.response > b.response;
        return a.index < b.index;
    });
    Permutation out;
    out.indices.resize(keys.size());
    for (std::size_t k = 0; k < keys.size(); ++k) out.indices[k] = keys[k].index;
    return out;
}

/// Reverses every prediction tie of the Best order, then restores index
/// order inside runs of equal responses.
inline Permutation worst_from_best(const Sample& sample, const Permutation& best) {
    const auto obs = sample.observations();
    std::vector<std::size_t> idx = best.indices;
    const auto equal = [&](std::size_t a, std::size_t b, auto field) { return obs[a].*field == obs[b].*field; };
    for (std::size_t lo = 0; lo < idx.size();) {
        std::size_t hi = lo + 1;
        while (hi < idx.size() && equal(idx[lo], idx[hi], &WeightedObservation::prediction)) ++hi;
        std::reverse(idx.begin() + lo, idx.begin() + hi);
        for (std::size_t r = lo; r < hi;) {
            std::size_t e = r + 1;
            while (e < hi && equal(idx[r], idx[e], &WeightedObservation::response)) ++e;
            std::reverse(idx.begin() + r, idx.begin() + e);
            r = e;
        }
        lo = hi;
    }
    return Permutation{std::move(idx)};
}

} // namespace detail

/// Predictions descending; inside a prediction tie the responses give the
/// suborder (descending for Best, ascending for Worst); remaining ties fall
/// back to the record index. The single lexicographic sort produces the same
/// permutation as a stable sort on responses followed by a stable sort on
/// predictions.
inline Permutation order_tied(const Sample& sample, TieDirection direction) {
    Permutation best = detail::best_order(sample);
    if (direction == TieDirection::Best) return best;
    return detail::worst_from_best(sample, best);
}

/// Both tie resolutions from a single sort.
inline std::pair<Permutation, Permutation> order_tied_both(const Sample& sample) {
    Permutation best = detail::best_order(sample);
    Permutation worst = detail::worst_from_best(sample, best);
    return {std::move(best), std::move(worst)};
}

/// Responses descending, equal responses by record index.
inline Permutation order_responses_desc(const Sample& sample) {
    const auto obs = sample.observations();
    std::vector<std::pair<double, std::size_t>> keys(obs.size());
    for (std::size_t i = 0; i < obs.size(); ++i) keys[i] = {obs[i].response, i};
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    Permutation out;
    out.indices.resize(keys.size());
    for (std::size_t k = 0; k < keys.size(); ++k) out.indices[k] = keys[k].second;
    return out;
}

} // namespace rankgini
