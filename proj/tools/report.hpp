#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rankgini/core.hpp"
#include "rankgini/gini.hpp"

namespace rankgini::cli {

inline constexpr int kReportSchemaVersion = 1;

/// Everything the scoring commands need to know about one invocation.
struct RunConfig {
    std::string command;
    std::string input;
    std::string response;
    std::vector<std::string> predictions;
    std::optional<std::string> weight;
    std::string format = "json";
    std::optional<std::string> curves_out;
    std::optional<std::string> svg;
    std::optional<std::string> output;
    bool allow_negative = false;
    bool percent = false;
};

struct ModelResult {
    std::string name;
    GiniReport report;
    ValidationReport validation;
};

nlohmann::json build_report(const RunConfig& config, const Sample& reference,
                            const std::vector<ModelResult>& models);

/// Deterministic JSON text: sorted keys, two-space indent, floating-point
/// numbers with 17 significant digits. Parsing the output and dumping it
/// again reproduces it byte for byte.
std::string canonical_dump(const nlohmann::json& doc);

std::string render_csv(const std::vector<ModelResult>& models, bool percent);

/// "30.5%" style presentation of a ratio.
std::string percent_string(double ratio);

} // namespace rankgini::cli
