#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rankgini/oracle.hpp"
#include "support.hpp"

using namespace rankgini;

namespace {

constexpr double kTol = 1e-12;

const std::vector<double> kEightY = {1.99, 2, 3, 4, 5, 6, 7, 8};
const std::vector<double> kEightP = {3, 3, 3, 3, 7, 7, 7, 7};
const std::vector<double> kThreePoint = {0.5, 0.5, 0.5, 1, 1, 1, 1, 2.5};

double erfc_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

} // namespace

TEST(NormalCdf, FrozenValues) {
    // 30-digit reference values
    EXPECT_NEAR(oracle::normal_cdf(1.0), 0.841344746068542948585, 1e-15);
    EXPECT_NEAR(oracle::normal_cdf(0.5), 0.691462461274013103638, 1e-15);
    EXPECT_NEAR(oracle::normal_cdf(-3.0), 0.00134989803163009452665, 1e-16);
    EXPECT_NEAR(oracle::normal_cdf(-8.0) / 6.22096057427178412352e-16, 1.0, 1e-12);
    EXPECT_EQ(oracle::normal_cdf(0.0), 0.5);
}

TEST(NormalCdf, AgreesWithErfc) {
    for (int k = -4000; k <= 4000; ++k) {
        const double x = k / 500.0;
        EXPECT_NEAR(oracle::normal_cdf(x), erfc_cdf(x), 1e-15) << x;
    }
}

TEST(NormalQuantile, FrozenValuesAndRoundTrip) {
    EXPECT_NEAR(oracle::normal_quantile(0.975), 1.95996398454005423552, 1e-13);
    EXPECT_NEAR(oracle::normal_quantile(1e-10), -6.36134090240405620470, 1e-11);
    EXPECT_EQ(oracle::normal_quantile(0.5), 0.0);
    for (int k = 1; k < 1000; ++k) {
        const double p = k / 1000.0;
        EXPECT_NEAR(oracle::normal_cdf(oracle::normal_quantile(p)), p, 1e-14);
    }
    EXPECT_THROW(oracle::normal_quantile(0.0), Error);
    EXPECT_THROW(oracle::normal_quantile(1.0), Error);
}

TEST(GeneralizedInverse, ThreePointTable) {
    const DiscreteDistribution d = three_point_distribution();
    EXPECT_EQ(oracle::generalized_inverse(d, 1e-9), 0.5);
    EXPECT_EQ(oracle::generalized_inverse(d, 3.0 / 8), 0.5);
    EXPECT_EQ(oracle::generalized_inverse(d, 0.5), 1.0);
    EXPECT_EQ(oracle::generalized_inverse(d, 7.0 / 8), 1.0);
    EXPECT_EQ(oracle::generalized_inverse(d, 0.9), 2.5);
    EXPECT_EQ(oracle::generalized_inverse(d, 1.0), 2.5);
    EXPECT_THROW(oracle::generalized_inverse(d, 0.0), Error);
    EXPECT_THROW(oracle::generalized_inverse(d, 1.5), Error);
}

TEST(DiscreteLorenz, ThreePointSteps) {
    const DiscreteDistribution d = three_point_distribution();
    EXPECT_EQ(oracle::discrete_lorenz(d, 0.0), 0.0);
    EXPECT_EQ(oracle::discrete_lorenz(d, 0.1), 0.0);
    EXPECT_EQ(oracle::discrete_lorenz(d, 1.0 / 8), 5.0 / 16);
    EXPECT_EQ(oracle::discrete_lorenz(d, 0.4), 5.0 / 16);
    EXPECT_EQ(oracle::discrete_lorenz(d, 5.0 / 8), 13.0 / 16);
    EXPECT_EQ(oracle::discrete_lorenz(d, 0.99), 13.0 / 16);
    EXPECT_EQ(oracle::discrete_lorenz(d, 1.0), 1.0);
    EXPECT_THROW(oracle::discrete_lorenz(d, 1.01), Error);
}

TEST(DiscreteDistribution, Validation) {
    EXPECT_THROW(DiscreteDistribution({{1, 0.5}, {1, 0.5}}), Error);
    EXPECT_THROW(DiscreteDistribution({{1, 0.5}, {2, 0.4}}), Error);
    EXPECT_THROW(DiscreteDistribution({{1, 1.2}, {2, -0.2}}), Error);
    EXPECT_THROW(DiscreteDistribution({{-1, 0.5}, {0, 0.5}}), Error);
    EXPECT_DOUBLE_EQ(three_point_distribution().mean(), 1.0);
}

TEST(LognormalLorenz, ClosedForm) {
    EXPECT_NEAR(oracle::lognormal_lorenz(1.0, 0.5), erfc_cdf(1.0), 1e-15);
    EXPECT_NEAR(oracle::lognormal_lorenz(1e-14, 0.3), 0.3, 1e-13);
    EXPECT_EQ(oracle::lognormal_lorenz(0.0, 0.3), 0.3);
    EXPECT_GT(oracle::lognormal_lorenz(1.0, 1.0 - 1e-12), 1.0 - 1e-9);
    EXPECT_THROW(oracle::lognormal_lorenz(1.0, 0.0), Error);
    EXPECT_THROW(oracle::lognormal_lorenz(-1.0, 0.5), Error);
}

TEST(LognormalLorenz, IncreasingConcaveAboveDiagonal) {
    for (double sigma : {0.1, 0.5, 1.0, 2.0}) {
        double prev = 0.0, prev_slope = INFINITY;
        for (int k = 1; k < 1000; ++k) {
            const double a = k / 1000.0;
            const double v = oracle::lognormal_lorenz(sigma, a);
            EXPECT_GT(v, a);
            EXPECT_GT(v, prev);
            const double slope = (v - prev) * 1000.0;
            EXPECT_LE(slope, prev_slope + 1e-9);
            prev = v;
            prev_slope = slope;
        }
    }
}

TEST(StepLorenz, Examples) {
    const Sample s = build_sample(kThreePoint, kThreePoint);
    EXPECT_NEAR(oracle::step_lorenz(s, 1.0 / 8), 5.0 / 16, 1e-15);
    EXPECT_NEAR(oracle::step_lorenz(s, 5.0 / 8), 13.0 / 16, 1e-15);

    const std::vector<double> y = {1, 2, 3, 4}, p = {3, 3, 3, 3};
    const std::vector<double> w = {1, 2, 1, 1};
    EXPECT_THROW(oracle::step_lorenz(build_sample(y, p, w), 0.5), Error);
    EXPECT_THROW(oracle::step_lorenz(s, 0.0), Error);
}

TEST(StepLorenz, IdenticalValuesStayAtZero) {
    const std::vector<double> y = {2, 2, 2, 2}, p = {1, 2, 3, 4};
    const Sample s = build_sample(y, p);
    for (double a : {0.1, 0.25, 0.5, 0.9}) EXPECT_EQ(oracle::step_lorenz(s, a), 0.0);
}

TEST(StepLorenz, MatchesCornersAndStaysBelowInterpolation) {
    std::mt19937_64 rng(51);
    for (std::size_t rep = 0; rep < 100; ++rep) {
        const Sample s = testkit::random_sample(rng, {.n = 2 + rep % 40});
        const Curve lorenz = lorenz_curve(s);
        const auto n = static_cast<double>(s.size());
        if (validate(build_sample(s.responses(), s.responses())).max_tie_size == 1) {
            for (std::size_t i = 1; i < s.size(); ++i) {
                EXPECT_NEAR(oracle::step_lorenz(s, i / n), lorenz[i].value, kTol);
            }
        }
        for (int k = 1; k < 100; ++k) {
            const double a = k / 100.0;
            EXPECT_LE(oracle::step_lorenz(s, a), evaluate(lorenz, a) + kTol);
        }
    }
}

TEST(AggregateTies, EightPoint) {
    const oracle::AggregatedSample a = oracle::aggregate_ties(build_sample(kEightY, kEightP));
    ASSERT_EQ(a.entries.size(), 2u);
    EXPECT_EQ(a.entries[0].prediction, 7.0);
    EXPECT_EQ(a.entries[0].response, 6.5);
    EXPECT_EQ(a.entries[1].prediction, 3.0);
    EXPECT_EQ(a.entries[1].response, 2.7475);
    EXPECT_EQ(a.entries[0].weight, 4.0);
}

TEST(AggregateTies, WeightedSingleGroup) {
    const std::vector<double> y = {2, 1}, p = {5, 5}, w = {1, 3};
    const oracle::AggregatedSample a = oracle::aggregate_ties(build_sample(y, p, w));
    ASSERT_EQ(a.entries.size(), 1u);
    EXPECT_EQ(a.entries[0].response, 1.25);
    EXPECT_EQ(a.entries[0].weight, 4.0);
}

TEST(AggregateTies, NoTiesIsSortedIdentity) {
    const std::vector<double> y = {1, 4, 2}, p = {0.2, 0.9, 0.5};
    const oracle::AggregatedSample a = oracle::aggregate_ties(build_sample(y, p));
    ASSERT_EQ(a.entries.size(), 3u);
    EXPECT_EQ(a.entries[0].response, 4.0);
    EXPECT_EQ(a.entries[1].response, 2.0);
    EXPECT_EQ(a.entries[2].response, 1.0);
}

TEST(CapAreaAggregated, EightPointMatchesMidArea) {
    const Sample s = build_sample(kEightY, kEightP);
    const CurveAreas a = curve_areas(s);
    EXPECT_LE(testkit::relative_gap(oracle::cap_area_aggregated(s), a.mid, std::max(std::abs(a.mid), a.lorenz)), kTol);
}

TEST(CapAreaAggregated, NoTiesMatchesBest) {
    const std::vector<double> y = {1, 4, 2, 7}, p = {0.2, 0.9, 0.5, 0.1};
    const Sample s = build_sample(y, p);
    const CurveAreas a = curve_areas(s);
    EXPECT_NEAR(oracle::cap_area_aggregated(s), a.best, kTol);
    EXPECT_EQ(a.best, a.mid);
}

TEST(CapAreaAggregated, RandomSamplesMatchMidArea) {
    std::mt19937_64 rng(52);
    for (std::size_t rep = 0; rep < 1000; ++rep) {
        const Sample s = testkit::random_sample(
            rng, {.n = 2 + rep % 150, .heavy_ties = rep % 2 == 0, .weighted = rep % 4 >= 2});
        const CurveAreas a = curve_areas(s);
        const double scale = std::max(std::abs(a.mid), a.lorenz);
        EXPECT_LE(testkit::relative_gap(oracle::cap_area_aggregated(s), a.mid, scale), kTol) << rep;
    }
}
