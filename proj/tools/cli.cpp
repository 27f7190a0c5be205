#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "csv_io.hpp"
#include "rankgini/rankgini.hpp"
#include "report.hpp"
#include "svg.hpp"

namespace rankgini::cli {

namespace {

namespace fs = std::filesystem;

struct LoadedData {
    std::vector<double> responses;
    std::vector<double> weights;  // empty: no weight column
    std::vector<NamedPredictions> models;
    std::vector<std::size_t> line_numbers;
};

LoadedData load(const RunConfig& cfg) {
    std::set<std::string> seen;
    for (const auto& p : cfg.predictions) {
        if (!seen.insert(p).second) throw InputError("prediction column '" + p + "' given more than once");
    }
    if (cfg.weight && seen.count(*cfg.weight)) {
        throw InputError("column '" + *cfg.weight + "' used both as weight and as prediction");
    }

    const CsvTable table = read_csv(cfg.input);
    const std::size_t response_col = table.column(cfg.response);
    std::vector<std::size_t> pred_cols;
    for (const auto& p : cfg.predictions) pred_cols.push_back(table.column(p));
    std::optional<std::size_t> weight_col;
    if (cfg.weight) weight_col = table.column(*cfg.weight);

    LoadedData data;
    data.line_numbers = table.line_numbers;
    for (const auto& p : cfg.predictions) data.models.push_back({p, {}});
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const std::size_t line = table.line_numbers[r];
        data.responses.push_back(parse_number(row[response_col], line, cfg.response));
        for (std::size_t m = 0; m < pred_cols.size(); ++m) {
            data.models[m].predictions.push_back(parse_number(row[pred_cols[m]], line, cfg.predictions[m]));
        }
        if (weight_col) {
            const std::string& cell = row[*weight_col];
            const bool blank = cell.find_first_not_of(" \t") == std::string::npos;
            data.weights.push_back(blank ? 1.0 : parse_number(cell, line, *cfg.weight));
        }
    }
    return data;
}

/// Re-raises a library error with the offending input line, when known.
[[noreturn]] void rethrow_with_line(const Error& e, const LoadedData& data) {
    std::string msg = e.what();
    if (e.record() && *e.record() < data.line_numbers.size()) {
        msg = "line " + std::to_string(data.line_numbers[*e.record()]) + ": " + msg;
    }
    throw Error(e.kind(), msg + " [" + std::string(to_string(e.kind())) + "]", e.record());
}

Sample make_sample(const LoadedData& data, const NamedPredictions& model, const RunConfig& cfg) {
    try {
        return build_sample(data.responses, model.predictions, data.weights,
                            BuildOptions{.allow_negative = cfg.allow_negative});
    } catch (const Error& e) {
        rethrow_with_line(e, data);
    }
}

ModelResult score_model(const Sample& sample, const std::string& name) {
    return {name, gini_score(sample), validate(sample)};
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output) {
        std::ofstream f(*cfg.output, std::ios::binary);
        if (!f) throw InputError("cannot write '" + *cfg.output + "'");
        f << text;
    } else {
        out << text;
    }
}

void emit_report(const RunConfig& cfg, const Sample& reference, const std::vector<ModelResult>& results,
                 std::ostream& out) {
    if (cfg.format == "csv") {
        emit(cfg, render_csv(results, cfg.percent), out);
    } else {
        emit(cfg, canonical_dump(build_report(cfg, reference, results)), out);
    }
}

void write_curve_csv(const fs::path& path, const Curve& curve) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + path.string() + "'");
    f << "alpha,value\n";
    for (const auto& p : curve.corners()) f << format_number(p.alpha) << ',' << format_number(p.value) << '\n';
}

std::string file_stem(const std::string& name) {
    std::string out = name;
    for (char& c : out) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
                        c == '-' || c == '.';
        if (!ok) c = '_';
    }
    return out;
}

void cmd_score(const RunConfig& cfg, std::ostream& out) {
    const LoadedData data = load(cfg);
    std::vector<ModelResult> results;
    std::optional<Sample> reference;
    for (const auto& m : data.models) {
        Sample s = make_sample(data, m, cfg);
        try {
            results.push_back(score_model(s, m.name));
        } catch (const Error& e) {
            rethrow_with_line(Error(e.kind(), "model '" + m.name + "': " + e.what(), e.record()), data);
        }
        if (!reference) reference = std::move(s);
    }
    emit_report(cfg, *reference, results, out);
}

void cmd_compare(const RunConfig& cfg, std::ostream& out) {
    if (cfg.predictions.size() < 2) throw InputError("compare needs at least two --prediction columns");
    const LoadedData data = load(cfg);
    ModelComparison comparison;
    try {
        comparison = compare(data.models, data.responses, data.weights,
                             BuildOptions{.allow_negative = cfg.allow_negative});
    } catch (const Error& e) {
        rethrow_with_line(e, data);
    }
    std::vector<ModelResult> results;
    for (auto& entry : comparison.entries) {
        const auto it = std::find_if(data.models.begin(), data.models.end(),
                                     [&](const NamedPredictions& m) { return m.name == entry.name; });
        results.push_back({entry.name, entry.report, validate(make_sample(data, *it, cfg))});
    }
    const Sample reference = make_sample(data, data.models.front(), cfg);
    emit_report(cfg, reference, results, out);
}

void cmd_curves(const RunConfig& cfg, std::ostream& out) {
    const LoadedData data = load(cfg);
    const fs::path dir = *cfg.curves_out;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw InputError("cannot create directory '" + dir.string() + "': " + ec.message());

    std::vector<ModelResult> results;
    std::vector<ModelCurves> drawn;
    std::optional<Sample> reference;
    std::optional<Curve> lorenz;
    for (const auto& m : data.models) {
        Sample s = make_sample(data, m, cfg);
        try {
            results.push_back(score_model(s, m.name));
        } catch (const Error& e) {
            rethrow_with_line(Error(e.kind(), "model '" + m.name + "': " + e.what(), e.record()), data);
        }
        if (!lorenz) {
            lorenz = lorenz_curve(s);
            write_curve_csv(dir / "lorenz.csv", *lorenz);
        }
        ModelCurves mc{m.name, cap_curve(s, TieDirection::Best), cap_curve(s, TieDirection::Worst), std::nullopt,
                       results.back().report.areas};
        if (s.all_weights_equal()) mc.mid = cap_curve_mid(s);
        const std::string stem = file_stem(m.name);
        write_curve_csv(dir / (stem + ".best.csv"), mc.best);
        write_curve_csv(dir / (stem + ".worst.csv"), mc.worst);
        if (mc.mid) write_curve_csv(dir / (stem + ".mid.csv"), *mc.mid);
        drawn.push_back(std::move(mc));
        if (!reference) reference = std::move(s);
    }
    if (cfg.svg) {
        std::ofstream f(*cfg.svg, std::ios::binary);
        if (!f) throw InputError("cannot write '" + *cfg.svg + "'");
        f << render_svg(*lorenz, results.front().report.areas.lorenz, drawn);
    }
    emit_report(cfg, *reference, results, out);
}

struct SimulateConfig {
    std::string generator;
    std::size_t n = 1000;
    std::uint64_t seed = 1;
    double mu = 0.0;
    double sigma = 1.0;
    bool forced = false;
    std::optional<std::string> output;
};

void cmd_simulate(const SimulateConfig& cfg, std::ostream& out) {
    const datagen::Seed seed{cfg.seed};
    std::ostringstream os;
    const auto row = [&os](std::initializer_list<double> values) {
        bool first = true;
        for (double v : values) {
            if (!first) os << ',';
            first = false;
            os << format_number(v);
        }
        os << '\n';
    };

    if (cfg.generator == "lognormal" || cfg.generator == "discrete") {
        const Sample s = cfg.generator == "lognormal"
                             ? datagen::sample_lognormal(cfg.n, cfg.mu, cfg.sigma, seed)
                             : datagen::sample_discrete(cfg.n, three_point_distribution(), seed,
                                                        cfg.forced ? datagen::DiscreteMode::ForcedProportions
                                                                   : datagen::DiscreteMode::Random);
        os << "response,prediction,weight\n";
        for (const auto& o : s.observations()) row({o.response, o.prediction, o.weight});
    } else if (cfg.generator == "two-models") {
        const auto t = datagen::sample_two_models(cfg.n, seed);
        os << "response,model1,model2,weight\n";
        for (std::size_t i = 0; i < t.model1.size(); ++i) {
            row({t.model1[i].response, t.model1[i].prediction, t.model2[i].prediction, t.model1[i].weight});
        }
    } else if (cfg.generator == "frequency") {
        const auto p = datagen::sample_frequency_portfolio(cfg.n, seed);
        os << "response,fine,coarse,weight\n";
        for (std::size_t i = 0; i < p.fine.size(); ++i) {
            row({p.fine[i].response, p.fine[i].prediction, p.coarse[i].prediction, p.fine[i].weight});
        }
    } else {
        throw InputError("unknown generator '" + cfg.generator +
                         "' (expected lognormal, discrete, two-models or frequency)");
    }

    if (cfg.output) {
        std::ofstream f(*cfg.output, std::ios::binary);
        if (!f) throw InputError("cannot write '" + *cfg.output + "'");
        f << os.str();
    } else {
        out << os.str();
    }
}

void add_scoring_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--input", cfg.input, "CSV file with a header row")->required();
    sub->add_option("--response", cfg.response, "response column")->required();
    sub->add_option("--prediction", cfg.predictions, "prediction column (repeatable)")->required();
    sub->add_option("--weight", cfg.weight, "case weight column; blank cells count as 1");
    sub->add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", cfg.output, "write the report here instead of stdout");
    sub->add_flag("--allow-negative", cfg.allow_negative, "accept negative responses");
    sub->add_flag("--percent", cfg.percent, "print the score as a percentage in CSV reports");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rankgini: tie-aware Gini scores, Lorenz curves and CAPs for weighted samples"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    RunConfig score_cfg, compare_cfg, curves_cfg;
    score_cfg.command = "score";
    compare_cfg.command = "compare";
    curves_cfg.command = "curves";
    SimulateConfig sim_cfg;

    auto* score = app.add_subcommand("score", "score one or more prediction columns");
    add_scoring_options(score, score_cfg);
    auto* cmp = app.add_subcommand("compare", "rank two or more prediction columns by Gini score");
    add_scoring_options(cmp, compare_cfg);
    auto* curves = app.add_subcommand("curves", "export Lorenz and CAP corner sets (CSV) and an SVG plot");
    add_scoring_options(curves, curves_cfg);
    curves->add_option("--curves-out", curves_cfg.curves_out, "directory for the corner CSV files")->required();
    curves->add_option("--svg", curves_cfg.svg, "SVG output path");

    auto* sim = app.add_subcommand("simulate", "write a seeded synthetic sample as CSV");
    sim->add_option("generator", sim_cfg.generator, "lognormal | discrete | two-models | frequency")->required();
    sim->add_option("--n", sim_cfg.n, "number of records");
    sim->add_option("--seed", sim_cfg.seed, "random seed");
    sim->add_option("--mu", sim_cfg.mu, "lognormal: log-scale mean");
    sim->add_option("--sigma", sim_cfg.sigma, "lognormal: log-scale standard deviation");
    sim->add_flag("--forced-proportions", sim_cfg.forced, "discrete: exact atom proportions instead of draws");
    sim->add_option("--output", sim_cfg.output, "CSV output path (default stdout)");

    std::vector<const char*> argv{"rankgini"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (score->parsed()) cmd_score(score_cfg, out);
        else if (cmp->parsed()) cmd_compare(compare_cfg, out);
        else if (curves->parsed()) cmd_curves(curves_cfg, out);
        else if (sim->parsed()) cmd_simulate(sim_cfg, out);
        return kExitOk;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::DegenerateResponses ? kExitDegenerate : kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

} // namespace rankgini::cli
