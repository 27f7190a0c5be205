#pragma once

// Seeded synthetic samples. All generators draw from xoshiro256** seeded
// through splitmix64, with hand-written transforms (Box-Muller normals,
// inversion for Poisson and discrete draws) so that a stream depends only on
// (seed, parameters) and not on the standard library's distributions.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include "rankgini/core.hpp"
#include "rankgini/distribution.hpp"
#include "rankgini/error.hpp"

namespace rankgini::datagen {

struct Seed {
    std::uint64_t value = 0;
};

/// xoshiro256** 1.0 (Blackman and Vigna). Satisfies
/// std::uniform_random_bit_generator.
class Xoshiro256StarStar {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256StarStar(Seed seed) {
        std::uint64_t x = seed.value;
        for (auto& s : state_) s = splitmix64(x);
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on the open interval (0,1), 53-bit resolution.
    double uniform() noexcept {
        return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::array<std::uint64_t, 4> state_{};
};

/// Box-Muller pairs; the second variate of each pair is cached.
class NormalSource {
public:
    explicit NormalSource(Xoshiro256StarStar& rng) : rng_(rng) {}

    double operator()() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(rng_.uniform()));
        const double theta = 2.0 * std::numbers::pi * rng_.uniform();
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

private:
    Xoshiro256StarStar& rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Poisson draw by sequential inversion; intended for small means.
inline std::uint64_t poisson(Xoshiro256StarStar& rng, double mean) {
    const double u = rng.uniform();
    double p = std::exp(-mean);
    double cdf = p;
    std::uint64_t k = 0;
    while (u > cdf && p > 0.0) {
        ++k;
        p *= mean / static_cast<double>(k);
        cdf += p;
    }
    return k;
}

namespace detail {

inline void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::BadParams, what);
}

} // namespace detail

/// Responses with log(Y) ~ N(mu, sigma^2); predictions equal the responses,
/// unit weights.
inline Sample sample_lognormal(std::size_t n, double mu, double sigma, Seed seed) {
    detail::require(n >= 2, "lognormal: n must be >= 2");
    detail::require(std::isfinite(mu) && std::isfinite(sigma) && sigma > 0.0, "lognormal: need finite mu and sigma > 0");
    Xoshiro256StarStar rng(seed);
    NormalSource normal(rng);
    std::vector<WeightedObservation> obs(n);
    for (auto& o : obs) {
        const double y = std::exp(mu + sigma * normal());
        o = {y, y, 1.0};
    }
    return build_sample(std::move(obs));
}

enum class DiscreteMode {
    Random,            ///< i.i.d. draws
    ForcedProportions  ///< exact counts round(n p_k), largest remainder
};

/// Atom draws; predictions equal the responses, unit weights. Forced mode
/// lists the atoms in increasing order.
inline Sample sample_discrete(std::size_t n, const DiscreteDistribution& dist, Seed seed,
                              DiscreteMode mode = DiscreteMode::Random) {
    detail::require(n >= 2, "discrete: n must be >= 2");
    const auto atoms = dist.atoms();
    std::vector<WeightedObservation> obs;
    obs.reserve(n);

    if (mode == DiscreteMode::ForcedProportions) {
        std::vector<std::size_t> counts(atoms.size());
        std::vector<std::pair<double, std::size_t>> remainders;
        std::size_t assigned = 0;
        for (std::size_t k = 0; k < atoms.size(); ++k) {
            const double exact = atoms[k].probability * static_cast<double>(n);
            counts[k] = static_cast<std::size_t>(std::floor(exact));
            assigned += counts[k];
            remainders.push_back({exact - std::floor(exact), k});
        }
        std::stable_sort(remainders.begin(), remainders.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        for (std::size_t r = 0; assigned < n; ++r, ++assigned) ++counts[remainders[r % remainders.size()].second];
        for (std::size_t k = 0; k < atoms.size(); ++k) {
            for (std::size_t c = 0; c < counts[k]; ++c) obs.push_back({atoms[k].value, atoms[k].value, 1.0});
        }
        return build_sample(std::move(obs));
    }

    Xoshiro256StarStar rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.uniform();
        double cumulative = 0.0;
        double y = atoms.back().value;
        for (const Atom& a : atoms) {
            cumulative += a.probability;
            if (u <= cumulative) {
                y = a.value;
                break;
            }
        }
        obs.push_back({y, y, 1.0});
    }
    return build_sample(std::move(obs));
}

/// Two competing rankings on shared responses. The true mean is uniform on
/// {1,2,3,8,9,10} and Y | mu ~ N(mu, 1). Model 1 maps the means to
/// 1,2,3,10,7,8; model 2 to 2,2,2,10,7,8 and so cannot separate the three
/// lowest risks. Responses may be negative; both samples allow that.
struct TwoModelSamples {
    Sample model1;
    Sample model2;
    std::vector<double> true_means;
};

inline constexpr std::array<double, 6> kTwoModelMeans = {1, 2, 3, 8, 9, 10};
inline constexpr std::array<double, 6> kModel1Map = {1, 2, 3, 10, 7, 8};
inline constexpr std::array<double, 6> kModel2Map = {2, 2, 2, 10, 7, 8};

/// With balanced = true the means cycle through the six values in order
/// instead of being drawn.
inline TwoModelSamples sample_two_models(std::size_t n, Seed seed, bool balanced = false) {
    detail::require(n >= 6, "two-models: n must be >= 6");
    Xoshiro256StarStar rng(seed);
    NormalSource normal(rng);
    std::vector<WeightedObservation> m1(n), m2(n);
    std::vector<double> means(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t level = balanced ? i % 6 : static_cast<std::size_t>(rng.uniform() * 6.0);
        const double y = kTwoModelMeans[level] + normal();
        means[i] = kTwoModelMeans[level];
        m1[i] = {y, kModel1Map[level], 1.0};
        m2[i] = {y, kModel2Map[level], 1.0};
    }
    const BuildOptions allow_negative{.allow_negative = true};
    return {build_sample(std::move(m1), allow_negative), build_sample(std::move(m2), allow_negative),
            std::move(means)};
}

/// Claims-frequency portfolio. Exposures w are uniform on (0.1, 1]; a
/// continuous covariate x ~ U(0,1) and a binary tier t ~ Bernoulli(0.3) give
/// the intensity lambda = 0.053 exp(1.2 (x - 1/2)) (1 + t), about 7% on
/// average. Claim counts N ~ Poisson(w lambda) and responses Y = N / w.
/// The fine model predicts lambda itself, the coarse model only the mean
/// intensity of the tier (two distinct values).
struct FrequencyPortfolio {
    Sample fine;
    Sample coarse;
};

inline FrequencyPortfolio sample_frequency_portfolio(std::size_t n, Seed seed) {
    detail::require(n >= 2, "frequency: n must be >= 2");
    constexpr double base = 0.053;
    constexpr double slope = 1.2;
    // E[exp(slope (x - 1/2))] for x ~ U(0,1)
    const double mean_shape = (std::exp(slope / 2) - std::exp(-slope / 2)) / slope;

    Xoshiro256StarStar rng(seed);
    std::vector<WeightedObservation> fine(n), coarse(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double w = 0.1 + 0.9 * (1.0 - rng.uniform());
        const double x = rng.uniform();
        const double tier = rng.uniform() < 0.3 ? 2.0 : 1.0;
        const double lambda = base * std::exp(slope * (x - 0.5)) * tier;
        const double y = static_cast<double>(poisson(rng, w * lambda)) / w;
        fine[i] = {y, lambda, w};
        coarse[i] = {y, base * mean_shape * tier, w};
    }
    return {build_sample(std::move(fine)), build_sample(std::move(coarse))};
}

} // namespace rankgini::datagen
