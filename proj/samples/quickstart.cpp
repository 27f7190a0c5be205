// Scores two rankings of the same eight responses. The second model can only
// tell "low" from "high" and therefore ties four records at a time.

#include <cstdio>
#include <vector>

#include "rankgini/rankgini.hpp"

int main() {
    using namespace rankgini;

    const std::vector<double> responses = {1.99, 2, 3, 4, 5, 6, 7, 8};
    const std::vector<NamedPredictions> models = {
        {"fine", {2.01, 2, 3, 4, 5, 6, 7, 8}},
        {"coarse", {3, 3, 3, 3, 7, 7, 7, 7}},
    };

    const ModelComparison result = compare(models, responses);
    for (const auto& e : result.entries) {
        const CurveAreas& a = e.report.areas;
        std::printf("%-7s gini=%.4f  B=%.4f  A_best=%.4f  A_worst=%.4f  ties=%zu groups\n", e.name.c_str(),
                    e.report.gini, a.lorenz, a.best, a.worst, e.report.tie_group_count);
    }

    // Aggregating the ties first would make the coarse model look perfect.
    const Sample coarse = build_sample(responses, models[1].predictions);
    for (const auto& entry : oracle::aggregate_ties(coarse).entries) {
        std::printf("tie at prediction %.0f: mean response %.4f, weight %.0f\n", entry.prediction, entry.response,
                    entry.weight);
    }
    return 0;
}
