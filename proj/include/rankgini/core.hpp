#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rankgini/error.hpp"
#include "rankgini/summation.hpp"

namespace rankgini {

/// One validation record: observed response, model prediction and a
/// strictly positive case weight (exposure).
struct WeightedObservation {
    double response = 0.0;
    double prediction = 0.0;
    double weight = 1.0;

    friend bool operator==(const WeightedObservation&, const WeightedObservation&) = default;
};

/// Raw input row. An absent weight means unit weight.
struct Record {
    double response = 0.0;
    double prediction = 0.0;
    std::optional<double> weight;
};

struct BuildOptions {
    /// Accept responses below zero. The Lorenz curve is then no longer
    /// guaranteed to stay within the unit square.
    bool allow_negative = false;
};

/// Validated, immutable collection of observations with cached totals.
class Sample {
public:
    std::span<const WeightedObservation> observations() const noexcept { return observations_; }
    const WeightedObservation& operator[](std::size_t i) const { return observations_[i]; }
    std::size_t size() const noexcept { return observations_.size(); }

    double total_weight() const noexcept { return total_weight_; }
    double total_weighted_response() const noexcept { return total_weighted_response_; }

    bool all_weights_equal() const noexcept {
        const double w0 = observations_.front().weight;
        return std::all_of(observations_.begin(), observations_.end(),
                           [w0](const WeightedObservation& o) { return o.weight == w0; });
    }

    bool unit_weights() const noexcept {
        return std::all_of(observations_.begin(), observations_.end(),
                           [](const WeightedObservation& o) { return o.weight == 1.0; });
    }

    bool all_responses_equal() const noexcept {
        const double y0 = observations_.front().response;
        return std::all_of(observations_.begin(), observations_.end(),
                           [y0](const WeightedObservation& o) { return o.response == y0; });
    }

    std::vector<double> responses() const {
        std::vector<double> out;
        out.reserve(size());
        for (const auto& o : observations_) out.push_back(o.response);
        return out;
    }
    std::vector<double> predictions() const {
        std::vector<double> out;
        out.reserve(size());
        for (const auto& o : observations_) out.push_back(o.prediction);
        return out;
    }
    std::vector<double> weights() const {
        std::vector<double> out;
        out.reserve(size());
        for (const auto& o : observations_) out.push_back(o.weight);
        return out;
    }

private:
    Sample(std::vector<WeightedObservation> obs, double tw, double twr)
        : observations_(std::move(obs)), total_weight_(tw), total_weighted_response_(twr) {}

    friend Sample build_sample(std::vector<WeightedObservation> observations,
                               const BuildOptions& options);

    std::vector<WeightedObservation> observations_;
    double total_weight_ = 0.0;
    double total_weighted_response_ = 0.0;
};

/// Checks every observation, then caches Σw and Σw·Y. Input order is kept.
inline Sample build_sample(std::vector<WeightedObservation> observations,
                           const BuildOptions& options = {}) {
    if (observations.size() < 2) {
        throw Error(ErrorKind::EmptyOrSingleton,
                    "a sample needs at least 2 records, got " + std::to_string(observations.size()));
    }
    CompensatedSum weight_sum;
    CompensatedSum weighted_response_sum;
    for (std::size_t i = 0; i < observations.size(); ++i) {
        const auto& o = observations[i];
        if (!std::isfinite(o.response) || !std::isfinite(o.prediction) || !std::isfinite(o.weight)) {
            throw Error(ErrorKind::NonFiniteValue,
                        "record " + std::to_string(i) + ": non-finite value", i);
        }
        if (!(o.weight > 0.0)) {
            throw Error(ErrorKind::NonPositiveWeight,
                        "record " + std::to_string(i) + ": weight must be > 0", i);
        }
        if (o.response < 0.0 && !options.allow_negative) {
            throw Error(ErrorKind::NegativeResponse,
                        "record " + std::to_string(i) + ": negative response", i);
        }
        weight_sum += o.weight;
        weighted_response_sum += o.weight * o.response;
    }
    const double tw = weight_sum.value();
    const double twr = weighted_response_sum.value();
    if (!(twr > 0.0)) {
        throw Error(ErrorKind::ZeroTotalResponse, "total weighted response must be > 0");
    }
    return Sample(std::move(observations), tw, twr);
}

inline Sample build_sample(std::span<const Record> records, const BuildOptions& options = {}) {
    std::vector<WeightedObservation> obs;
    obs.reserve(records.size());
    for (const auto& r : records) obs.push_back({r.response, r.prediction, r.weight.value_or(1.0)});
    return build_sample(std::move(obs), options);
}

/// Column form. An empty weight span means unit weights.
inline Sample build_sample(std::span<const double> responses, std::span<const double> predictions,
                           std::span<const double> weights = {}, const BuildOptions& options = {}) {
    if (responses.size() != predictions.size() || (!weights.empty() && weights.size() != responses.size())) {
        throw Error(ErrorKind::LengthMismatch, "response, prediction and weight columns differ in length");
    }
    std::vector<WeightedObservation> obs(responses.size());
    for (std::size_t i = 0; i < obs.size(); ++i) {
        obs[i] = {responses[i], predictions[i], weights.empty() ? 1.0 : weights[i]};
    }
    return build_sample(std::move(obs), options);
}

enum class ValidationFlag {
    AllPredictionsConstant,
    AllResponsesEqual,
};

constexpr std::string_view to_string(ValidationFlag flag) noexcept {
    switch (flag) {
    case ValidationFlag::AllPredictionsConstant: return "all-predictions-constant";
    case ValidationFlag::AllResponsesEqual: return "all-responses-equal";
    }
    return "unknown";
}

struct ValidationReport {
    std::size_t n = 0;
    std::size_t tie_group_count = 0;  ///< distinct prediction values
    std::size_t max_tie_size = 0;
    std::vector<ValidationFlag> flags;

    bool has(ValidationFlag f) const {
        return std::find(flags.begin(), flags.end(), f) != flags.end();
    }
};

/// Tie structure of the predictions, grouped by exact equality.
inline ValidationReport validate(const Sample& sample) {
    std::vector<double> preds = sample.predictions();
    std::sort(preds.begin(), preds.end());

    ValidationReport report;
    report.n = preds.size();
    std::size_t run = 0;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        if (i == 0 || preds[i] != preds[i - 1]) {
            ++report.tie_group_count;
            run = 0;
        }
        ++run;
        report.max_tie_size = std::max(report.max_tie_size, run);
    }
    if (report.tie_group_count == 1) report.flags.push_back(ValidationFlag::AllPredictionsConstant);
    if (sample.all_responses_equal()) report.flags.push_back(ValidationFlag::AllResponsesEqual);
    return report;
}

} // namespace rankgini
