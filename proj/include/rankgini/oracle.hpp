#pragma once

// Independent reference computations used to cross-check the curves module.
// Nothing in here reuses the corner-set or area code of curves.hpp.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "rankgini/core.hpp"
#include "rankgini/distribution.hpp"
#include "rankgini/error.hpp"

namespace rankgini::oracle {

// ---------------------------------------------------------------------------
// Standard normal distribution
// ---------------------------------------------------------------------------

/// Standard normal CDF in extended precision. Near the centre the power
/// series Phi(x) = 1/2 + phi(x) (x + x^3/3 + x^5/(3*5) + ...) is summed; in
/// the tails the Laplace continued fraction for the Mills ratio,
/// Q(z) = phi(z) / (z + 1/(z + 2/(z + 3/(z + ...)))), is evaluated with the
/// modified Lentz method. Relative error is a few ulp on either side.
inline double normal_cdf(double x) {
    if (std::isnan(x)) return x;
    const long double z = std::fabs(static_cast<long double>(x));
    constexpr long double inv_sqrt_2pi = 0.398942280401432677939946059934381868L;
    if (z > 40.0L) return x > 0.0 ? 1.0 : 0.0;
    const long double density = inv_sqrt_2pi * std::exp(-0.5L * z * z);

    if (z < 2.5L) {
        const long double xx = static_cast<long double>(x);
        long double term = xx;
        long double sum = xx;
        for (int k = 1; k < 200; ++k) {
            term *= xx * xx / (2 * k + 1);
            sum += term;
            if (std::fabs(term) <= std::fabs(sum) * 1e-21L) break;
        }
        return static_cast<double>(0.5L + density * sum);
    }

    // Lentz: f = b0 + a1/(b1 + a2/(b2 + ...)) with b_k = z, a_k = k.
    constexpr long double tiny = 1e-300L;
    long double f = z;
    long double c = f;
    long double d = 0.0L;
    for (int k = 1; k < 5000; ++k) {
        d = z + k * d;
        if (d == 0.0L) d = tiny;
        c = z + k / c;
        if (c == 0.0L) c = tiny;
        d = 1.0L / d;
        const long double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0L) <= 1e-21L) break;
    }
    const long double tail = density / f;
    return static_cast<double>(x > 0.0 ? 1.0L - tail : tail);
}

/// Standard normal quantile for p in (0,1): Acklam's rational approximation
/// followed by one Halley step against normal_cdf. Evaluated on the lower
/// half and mirrored, since 1 - p is exact for p >= 1/2.
inline double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw Error(ErrorKind::OutOfRange, "normal quantile needs p in (0,1)");
    if (p > 0.5) return -normal_quantile(1.0 - p);
    if (p == 0.5) return 0.0;

    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                                   1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                   6.680131188771972e+01,  -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                   -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                   3.754408661907416e+00};

    double x = 0.0;
    if (p < 0.02425) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    const double e = normal_cdf(x) - p;
    const double u = e * 2.5066282746310002 * std::exp(0.5 * x * x);
    return x - u / (1.0 + 0.5 * x * u);
}

// ---------------------------------------------------------------------------
// Analytic Lorenz curves
// ---------------------------------------------------------------------------

/// inf{y : F(y) >= p} on the atom grid, p in (0,1].
inline double generalized_inverse(const DiscreteDistribution& dist, double p) {
    if (!(p > 0.0 && p <= 1.0)) throw Error(ErrorKind::OutOfRange, "p must lie in (0,1]");
    const auto atoms = dist.atoms();
    double cumulative = 0.0;
    for (const Atom& a : atoms) {
        cumulative += a.probability;
        if (cumulative >= p) return a.value;
    }
    return atoms.back().value;  // p = 1 with probabilities summing to 1 - ulp
}

/// Exact (step-function) upper-tail Lorenz curve of a discrete law.
inline double discrete_lorenz(const DiscreteDistribution& dist, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorKind::OutOfRange, "alpha must lie in [0,1]");
    if (alpha == 0.0) return 0.0;
    if (alpha == 1.0) return 1.0;
    const double threshold = generalized_inverse(dist, 1.0 - alpha);
    double mass = 0.0;
    for (const Atom& a : dist.atoms()) {
        if (a.value > threshold) mass += a.probability * a.value;
    }
    return mass / dist.mean();
}

/// Lorenz curve of a log-normal law with log-scale deviation sigma:
/// 1 - Phi(Phi^-1(1 - alpha) - sigma), written as Phi(Phi^-1(alpha) + sigma).
inline double lognormal_lorenz(double sigma, double alpha) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw Error(ErrorKind::OutOfRange, "sigma must be >= 0");
    if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorKind::OutOfRange, "alpha must lie in (0,1)");
    if (sigma == 0.0) return alpha;
    return normal_cdf(normal_quantile(alpha) + sigma);
}

/// Non-interpolated empirical Lorenz curve built from the empirical
/// generalized inverse. Unit weights only.
inline double step_lorenz(const Sample& sample, double alpha) {
    if (!sample.unit_weights()) throw Error(ErrorKind::UnequalWeights, "step Lorenz curve needs unit weights");
    if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorKind::OutOfRange, "alpha must lie in (0,1)");

    std::vector<double> ys = sample.responses();
    std::sort(ys.begin(), ys.end());
    const auto n = static_cast<double>(ys.size());

    // Smallest k with k/n >= 1 - alpha. Targets within rounding of an
    // integer are snapped so that alpha = i/n lands on its grid point.
    double target = (1.0 - alpha) * n;
    const double nearest = std::round(target);
    if (std::abs(target - nearest) <= 64.0 * 2.220446049250313e-16 * n) target = nearest;
    const auto k = static_cast<std::size_t>(std::clamp(std::ceil(target), 1.0, n));
    const double threshold = ys[k - 1];

    long double above = 0.0L;
    long double total = 0.0L;
    for (double y : ys) {
        total += y;
        if (y > threshold) above += y;
    }
    return static_cast<double>(above / total);
}

// ---------------------------------------------------------------------------
// Tie aggregation
// ---------------------------------------------------------------------------

struct AggregatedEntry {
    double response = 0.0;    ///< weighted mean response inside the tie
    double prediction = 0.0;  ///< the shared prediction value
    double weight = 0.0;      ///< summed weight of the tie
};

/// One entry per distinct prediction, predictions strictly decreasing.
struct AggregatedSample {
    std::vector<AggregatedEntry> entries;
};

inline AggregatedSample aggregate_ties(const Sample& sample) {
    const auto obs = sample.observations();
    std::vector<std::size_t> idx(obs.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return obs[a].prediction > obs[b].prediction; });

    AggregatedSample out;
    std::size_t i = 0;
    while (i < idx.size()) {
        const double pred = obs[idx[i]].prediction;
        long double w = 0.0L;
        long double wy = 0.0L;
        for (; i < idx.size() && obs[idx[i]].prediction == pred; ++i) {
            w += obs[idx[i]].weight;
            wy += static_cast<long double>(obs[idx[i]].weight) * obs[idx[i]].response;
        }
        out.entries.push_back({static_cast<double>(wy / w), pred, static_cast<double>(w)});
    }
    return out;
}

/// Area between the diagonal and the straight-line CAP through the
/// tie-aggregated corners.
inline double cap_area_aggregated(const Sample& sample) {
    const AggregatedSample agg = aggregate_ties(sample);
    long double total_w = 0.0L;
    long double total_wy = 0.0L;
    for (const auto& e : agg.entries) {
        total_w += e.weight;
        total_wy += static_cast<long double>(e.weight) * e.response;
    }
    long double cum_w = 0.0L;
    long double cum_wy = 0.0L;
    long double prev_alpha = 0.0L;
    long double prev_value = 0.0L;
    long double area = 0.0L;
    for (const auto& e : agg.entries) {
        cum_w += e.weight;
        cum_wy += static_cast<long double>(e.weight) * e.response;
        const long double alpha = cum_w / total_w;
        const long double value = cum_wy / total_wy;
        area += (alpha - prev_alpha) * (value + prev_value) / 2.0L;
        prev_alpha = alpha;
        prev_value = value;
    }
    return static_cast<double>(area - 0.5L);
}

} // namespace rankgini::oracle
