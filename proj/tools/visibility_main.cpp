// visibility — command-line front end for the clock interferometry models.
//
//   visibility point --model <m> [--delta-e X ...]
//   visibility sweep --config <path> [--out <path>] [--format csv|json]
//   visibility figure <preset-id> [--out <path>] [--format csv|json]
//   visibility validate [--strict] [--alpha-branch principal|quadrant]
//
// Exit status: 0 success, 1 validation report failure, 2 usage/config error.

#include "clockvis/errors.hpp"
#include "clockvis/presets.hpp"
#include "clockvis/sweep.hpp"
#include "clockvis/sweep_config.hpp"
#include "clockvis/validation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

namespace sw = clockvis::sweep;

constexpr int kExitOk = 0;
constexpr int kExitReportFailed = 1;
constexpr int kExitUsage = 2;

void emit(const std::vector<sw::SweepRecord>& records, sw::OutputFormat format, const std::string& path) {
    if (path.empty() || path == "-") {
        sw::write_records(std::cout, records, format);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw clockvis::ValidationError("cannot open output file '" + path + "'");
    sw::write_records(out, records, format);
    out.close();
    if (!out) throw clockvis::ValidationError("failed writing output file '" + path + "'");
}

struct PointArgs {
    std::string model;
    std::string format{"csv"};
    std::string alpha_branch{"principal"};
    double tail_epsilon{1e-12};
    std::vector<std::pair<std::string, std::optional<double>>> values{
        {"delta_e", {}}, {"omega", {}},       {"lambda", {}}, {"lambda1", {}}, {"lambda2", {}}, {"delta_tau", {}},
        {"temperature", {}}, {"tau1", {}}, {"tau2", {}},   {"p1", {}},      {"p2", {}},
    };
};

std::string flag_for(const std::string& name) {
    std::string flag = "--" + name;
    for (auto& c : flag) {
        if (c == '_') c = '-';
    }
    return flag;
}

int run_point(const PointArgs& args) {
    sw::Binding binding;
    for (const auto& [name, value] : args.values) {
        if (value) binding[name] = *value;
    }
    sw::EvalOptions options;
    options.alpha_branch = sw::parse_alpha_branch(args.alpha_branch);
    options.tail_epsilon = args.tail_epsilon;
    const auto record = sw::evaluate_point(sw::parse_model(args.model), binding, options);
    emit({record}, sw::parse_format(args.format), "");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clock interferometry visibility simulator"};
    app.require_subcommand(1);

    PointArgs point;
    auto* point_cmd = app.add_subcommand("point", "Evaluate one parameter point and print one record");
    point_cmd->add_option("--model", point.model, "noiseless, jc, jc_thermal, ad, pd or dp")->required();
    for (auto& [name, value] : point.values) point_cmd->add_option(flag_for(name), value, name);
    point_cmd->add_option("--alpha-branch", point.alpha_branch, "principal or quadrant");
    point_cmd->add_option("--tail-epsilon", point.tail_epsilon, "thermal tail truncation");
    point_cmd->add_option("--format", point.format, "csv or json");

    std::string config_path;
    std::optional<std::string> sweep_out;
    std::optional<std::string> sweep_format;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a sweep described by a JSON config");
    sweep_cmd->add_option("--config", config_path, "JSON run configuration")->required();
    sweep_cmd->add_option("--out", sweep_out, "output path (default: config 'output', else stdout)");
    sweep_cmd->add_option("--format", sweep_format, "csv or json (overrides the config)");

    std::string preset_id;
    std::string figure_out;
    std::string figure_format{"csv"};
    bool list_presets = false;
    auto* figure_cmd = app.add_subcommand("figure", "Regenerate the data grid behind a figure");
    figure_cmd->add_option("preset", preset_id, "preset id");
    figure_cmd->add_option("--out", figure_out, "output path (default stdout)");
    figure_cmd->add_option("--format", figure_format, "csv or json");
    figure_cmd->add_flag("--list", list_presets, "print the preset ids with descriptions");

    bool strict = false;
    std::string validate_branch{"principal"};
    auto* validate_cmd = app.add_subcommand("validate", "Run the self-check suite and print a JSON report");
    validate_cmd->add_flag("--strict", strict, "halve the golden-value tolerances");
    validate_cmd->add_option("--alpha-branch", validate_branch, "principal or quadrant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*point_cmd) return run_point(point);

        if (*sweep_cmd) {
            const sw::SweepConfig cfg = sw::load_sweep_config(config_path);
            const auto format = sweep_format ? sw::parse_format(*sweep_format) : cfg.format.value_or(sw::OutputFormat::csv);
            std::vector<sw::SweepRecord> records;
            for (const auto& spec : cfg.panels) {
                auto panel = sw::run_sweep(spec);
                records.insert(records.end(), panel.begin(), panel.end());
            }
            emit(records, format, sweep_out.value_or(cfg.output_path.value_or("")));
            return kExitOk;
        }

        if (*figure_cmd) {
            if (list_presets) {
                for (const auto& id : sw::preset_ids()) {
                    std::cout << id << "\t" << sw::figure_preset(id).description << '\n';
                }
                return kExitOk;
            }
            if (preset_id.empty()) throw clockvis::ValidationError("figure: missing preset id (see --list)");
            const auto format = sw::parse_format(figure_format);
            emit(sw::run_preset(sw::figure_preset(preset_id)), format, figure_out);
            return kExitOk;
        }

        if (*validate_cmd) {
            const auto report = clockvis::validation::run_validation(
                strict ? clockvis::validation::Profile::strict : clockvis::validation::Profile::standard,
                sw::parse_alpha_branch(validate_branch));
            clockvis::validation::write_report_json(std::cout, report);
            return report.passed() ? kExitOk : kExitReportFailed;
        }
    } catch (const std::exception& e) {
        std::cerr << "visibility: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
