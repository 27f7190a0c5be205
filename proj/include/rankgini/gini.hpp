#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rankgini/core.hpp"
#include "rankgini/curves.hpp"
#include "rankgini/error.hpp"

namespace rankgini {

struct GiniReport {
    double gini = 0.0;  ///< areas.mid / areas.lorenz
    CurveAreas areas;
    std::size_t n = 0;
    std::size_t tie_group_count = 0;
    std::size_t max_tie_size = 0;
    bool weighted = false;  ///< some weight differs from 1
};

/// Mid-solution Gini score: the average of the best- and worst-suborder CAP
/// areas divided by the Lorenz area.
inline GiniReport gini_score(const Sample& sample) {
    if (sample.all_responses_equal()) {
        throw Error(ErrorKind::DegenerateResponses,
                    "all responses are equal; the Lorenz area is zero and the score is undefined");
    }
    GiniReport report;
    report.areas = curve_areas(sample);
    if (!(report.areas.lorenz > 0.0)) {
        throw Error(ErrorKind::DegenerateResponses, "Lorenz area is not positive");
    }
    report.gini = report.areas.mid / report.areas.lorenz;
    const ValidationReport v = validate(sample);
    report.n = v.n;
    report.tie_group_count = v.tie_group_count;
    report.max_tie_size = v.max_tie_size;
    report.weighted = !sample.unit_weights();
    return report;
}

struct NamedPredictions {
    std::string name;
    std::vector<double> predictions;
};

struct ModelComparison {
    struct Entry {
        std::string name;
        GiniReport report;
    };
    std::vector<Entry> entries;  ///< gini descending, then name ascending
};

/// Scores every prediction vector against the same responses and weights.
/// An empty weight span means unit weights. Per-model failures are rethrown
/// with the model name prefixed to the message.
inline ModelComparison compare(std::span<const NamedPredictions> models,
                               std::span<const double> responses,
                               std::span<const double> weights = {},
                               const BuildOptions& options = {}) {
    for (const auto& m : models) {
        if (m.predictions.size() != responses.size()) {
            throw Error(ErrorKind::LengthMismatch,
                        "model '" + m.name + "': " + std::to_string(m.predictions.size()) +
                            " predictions for " + std::to_string(responses.size()) + " responses");
        }
    }
    if (!weights.empty() && weights.size() != responses.size()) {
        throw Error(ErrorKind::LengthMismatch, "weight column length differs from response column");
    }

    ModelComparison out;
    out.entries.reserve(models.size());
    for (const auto& m : models) {
        try {
            const Sample s = build_sample(responses, m.predictions, weights, options);
            out.entries.push_back({m.name, gini_score(s)});
        } catch (const Error& e) {
            throw Error(e.kind(), "model '" + m.name + "': " + e.what(), e.record());
        }
    }
    std::stable_sort(out.entries.begin(), out.entries.end(), [](const auto& a, const auto& b) {
        if (a.report.gini != b.report.gini) return a.report.gini > b.report.gini;
        return a.name < b.name;
    });
    return out;
}

} // namespace rankgini
