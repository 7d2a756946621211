#include "clockvis/presets.hpp"

#include "clockvis/errors.hpp"

#include <initializer_list>

namespace clockvis::sweep {

namespace {

SweepSpec panel(Model model, std::vector<Axis> axes, Binding fixed) {
    SweepSpec spec;
    spec.model = model;
    spec.axes = std::move(axes);
    spec.fixed = std::move(fixed);
    spec.validate();
    return spec;
}

// Heatmap over the clock gap and the coupling for each proper-time difference.
std::vector<SweepSpec> fringes(Model model, double lambda_max, std::initializer_list<double> delta_taus) {
    std::vector<SweepSpec> out;
    for (double dt : delta_taus) {
        out.push_back(panel(model, {{"delta_e", 0.0, 5.0, 101}, {"lambda", 0.0, lambda_max, 101}}, {{"delta_tau", dt}}));
    }
    return out;
}

// Heatmap over the two arms' transition probabilities for several tau2.
std::vector<SweepSpec> probability_grid(Model model) {
    std::vector<SweepSpec> out;
    for (double tau2 : {1.0, 2.0, 3.0}) {
        out.push_back(panel(model, {{"p1", 0.0, 1.0, 51}, {"p2", 0.0, 1.0, 51}},
                            {{"delta_e", 1.0}, {"tau1", 1.0}, {"tau2", tau2}}));
    }
    return out;
}

FigurePreset make(std::string_view id) {
    FigurePreset p;
    p.id = std::string(id);
    if (id == "jc-fringes") {
        p.description = "JC at T=0: visibility over delta_e x lambda (omega=1.1, delta_tau=1)";
        p.panels.push_back(panel(Model::jc, {{"delta_e", 0.0, 5.0, 101}, {"lambda", 0.0, 5.0, 101}},
                                 {{"omega", 1.1}, {"delta_tau", 1.0}}));
    } else if (id == "jc-omega") {
        p.description = "JC at T=0: visibility vs lambda for omega in {0.5,1,1.5,2,2.5} (delta_e=1, delta_tau=1)";
        p.panels.push_back(panel(Model::jc, {{"omega", 0.5, 2.5, 5}, {"lambda", 0.0, 5.0, 201}},
                                 {{"delta_e", 1.0}, {"delta_tau", 1.0}}));
    } else if (id == "jc-thermal") {
        p.description = "thermal JC at T=1 and T=10: delta_e x lambda (omega=1.1) and omega x lambda (delta_e=1), "
                        "delta_tau=1";
        for (double t : {1.0, 10.0}) {
            p.panels.push_back(panel(Model::jc_thermal, {{"delta_e", 0.0, 5.0, 51}, {"lambda", 0.0, 5.0, 51}},
                                     {{"omega", 1.1}, {"delta_tau", 1.0}, {"temperature", t}}));
            p.panels.push_back(panel(Model::jc_thermal, {{"omega", 0.5, 2.5, 51}, {"lambda", 0.0, 5.0, 51}},
                                     {{"delta_e", 1.0}, {"delta_tau", 1.0}, {"temperature", t}}));
        }
    } else if (id == "ad-fringes") {
        p.description = "AD channel: delta_e x lambda for delta_tau in {1,2,4}";
        p.panels = fringes(Model::ad, 1.5, {1.0, 2.0, 4.0});
    } else if (id == "ad-asymmetry") {
        p.description = "AD channel: p1 x p2 with tau1=1, delta_e=1, tau2 in {1,2,3}";
        p.panels = probability_grid(Model::ad);
    } else if (id == "pd-fringes") {
        p.description = "PD channel: delta_e x lambda for delta_tau in {1,2,4}";
        p.panels = fringes(Model::pd, 1.5, {1.0, 2.0, 4.0});
    } else if (id == "pd-symmetry") {
        p.description = "PD channel: p1 x p2 with tau1=1, delta_e=1, tau2 in {1,2,3}";
        p.panels = probability_grid(Model::pd);
    } else if (id == "dp-fringes") {
        p.description = "DP channel: delta_e x lambda for delta_tau in {1,2,4}";
        p.panels = fringes(Model::dp, 1.5, {1.0, 2.0, 4.0});
    } else if (id == "dp-grid") {
        p.description = "DP channel: p1 x p2 with tau1=1, delta_e=1, tau2 in {1,2,3}";
        p.panels = probability_grid(Model::dp);
    } else if (id == "compare-lambda") {
        p.description = "visibility vs lambda in [0,1.5] for noiseless, jc (omega=1.1), ad, pd, dp; delta_e=1, "
                        "delta_tau=1";
        const Axis lambda{"lambda", 0.0, 1.5, 301};
        p.panels.push_back(panel(Model::noiseless, {lambda}, {{"delta_e", 1.0}, {"delta_tau", 1.0}}));
        p.panels.push_back(panel(Model::jc, {lambda}, {{"delta_e", 1.0}, {"omega", 1.1}, {"delta_tau", 1.0}}));
        for (Model m : {Model::ad, Model::pd, Model::dp}) {
            p.panels.push_back(panel(m, {lambda}, {{"delta_e", 1.0}, {"delta_tau", 1.0}}));
        }
    } else if (id == "compare-dtau-de") {
        p.description = "per model, visibility vs delta_tau in [0,10] (delta_e=1) and vs delta_e in [0,10] "
                        "(delta_tau=1) for a few lambda";
        struct Row {
            Model model;
            Axis lambda;
            Binding extra;
        };
        const std::vector<Row> rows{
            {Model::jc, {"lambda", 0.0, 1.5, 4}, {{"omega", 1.1}}},
            {Model::ad, {"lambda", 0.0, 0.5, 3}, {}},
            {Model::pd, {"lambda", 0.0, 0.5, 3}, {}},
            {Model::dp, {"lambda", 0.0, 0.1, 3}, {}},
        };
        for (const auto& row : rows) {
            Binding vs_dtau = row.extra;
            vs_dtau["delta_e"] = 1.0;
            p.panels.push_back(panel(row.model, {row.lambda, {"delta_tau", 0.0, 10.0, 201}}, vs_dtau));
            Binding vs_de = row.extra;
            vs_de["delta_tau"] = 1.0;
            p.panels.push_back(panel(row.model, {row.lambda, {"delta_e", 0.0, 10.0, 201}}, vs_de));
        }
    } else {
        std::string valid;
        for (const auto& known : preset_ids()) valid += (valid.empty() ? "" : ", ") + known;
        throw ValidationError("unknown figure preset '" + std::string(id) + "' (valid: " + valid + ")");
    }
    return p;
}

} // namespace

std::size_t FigurePreset::point_count() const {
    std::size_t n = 0;
    for (const auto& spec : panels) n += spec.point_count();
    return n;
}

const std::vector<std::string>& preset_ids() {
    static const std::vector<std::string> ids{"jc-fringes",  "jc-omega",    "jc-thermal",   "ad-fringes",
                                              "ad-asymmetry", "pd-fringes", "pd-symmetry",  "dp-fringes",
                                              "dp-grid",     "compare-lambda", "compare-dtau-de"};
    return ids;
}

FigurePreset figure_preset(std::string_view id) { return make(id); }

std::vector<SweepRecord> run_preset(const FigurePreset& preset, const RunOptions& run) {
    std::vector<SweepRecord> out;
    out.reserve(preset.point_count());
    for (const auto& spec : preset.panels) {
        auto records = run_sweep(spec, run);
        out.insert(out.end(), records.begin(), records.end());
    }
    return out;
}

} // namespace clockvis::sweep
