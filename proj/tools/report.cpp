#include "report.hpp"

#include <sstream>

#include "csv_io.hpp"
#include "rankgini/rankgini.hpp"

namespace rankgini::cli {

using nlohmann::json;

std::string percent_string(double ratio) { return format_fixed(100.0 * ratio, 1) + "%"; }

json build_report(const RunConfig& config, const Sample& reference, const std::vector<ModelResult>& models) {
    json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["tool"] = {{"name", "rankgini"}, {"version", kVersion}};
    doc["command"] = config.command;
    doc["config"] = {
        {"input", config.input},
        {"response", config.response},
        {"predictions", config.predictions},
        {"weight", config.weight ? json(*config.weight) : json(nullptr)},
        {"allow_negative", config.allow_negative},
    };
    doc["sample"] = {
        {"n", reference.size()},
        {"total_weight", reference.total_weight()},
        {"total_weighted_response", reference.total_weighted_response()},
        {"weighted", !reference.unit_weights()},
    };
    json entries = json::array();
    for (const auto& m : models) {
        json flags = json::array();
        for (auto f : m.validation.flags) flags.push_back(std::string(to_string(f)));
        entries.push_back({
            {"name", m.name},
            {"gini", m.report.gini},
            {"gini_percent", percent_string(m.report.gini)},
            {"B", m.report.areas.lorenz},
            {"A_best", m.report.areas.best},
            {"A_worst", m.report.areas.worst},
            {"A_mid", m.report.areas.mid},
            {"n", m.report.n},
            {"tie_group_count", m.report.tie_group_count},
            {"max_tie_size", m.report.max_tie_size},
            {"flags", flags},
        });
    }
    doc["models"] = std::move(entries);
    return doc;
}

namespace {

void dump_value(const json& v, int depth, std::string& out) {
    const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
    const std::string close_pad(2 * static_cast<std::size_t>(depth), ' ');
    switch (v.type()) {
    case json::value_t::object: {
        if (v.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            out += pad;
            out += json(it.key()).dump();
            out += ": ";
            dump_value(it.value(), depth + 1, out);
        }
        out += "\n" + close_pad + "}";
        return;
    }
    case json::value_t::array: {
        if (v.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        bool first = true;
        for (const auto& item : v) {
            if (!first) out += ",\n";
            first = false;
            out += pad;
            dump_value(item, depth + 1, out);
        }
        out += "\n" + close_pad + "]";
        return;
    }
    case json::value_t::number_float:
        out += format_number(v.get<double>());
        return;
    default:
        out += v.dump();
        return;
    }
}

} // namespace

std::string canonical_dump(const json& doc) {
    std::string out;
    dump_value(doc, 0, out);
    out += "\n";
    return out;
}

std::string render_csv(const std::vector<ModelResult>& models, bool percent) {
    std::ostringstream os;
    os << "model,gini,B,A_best,A_worst,A_mid,n,tie_group_count,max_tie_size\n";
    for (const auto& m : models) {
        const auto& a = m.report.areas;
        os << m.name << ','
           << (percent ? percent_string(m.report.gini) : format_number(m.report.gini)) << ','
           << format_number(a.lorenz) << ',' << format_number(a.best) << ',' << format_number(a.worst) << ','
           << format_number(a.mid) << ',' << m.report.n << ',' << m.report.tie_group_count << ','
           << m.report.max_tie_size << '\n';
    }
    return os.str();
}

} // namespace rankgini::cli
