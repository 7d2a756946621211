#include "clockvis/sweep_config.hpp"

#include "clockvis/errors.hpp"
#include "clockvis/presets.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace clockvis::sweep {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed, std::string_view where) {
    for (const auto& [key, value] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ValidationError("config: unknown key '" + key + "' in " + std::string(where));
        }
    }
}

double number(const json& v, std::string_view what) {
    if (!v.is_number()) throw ValidationError("config: " + std::string(what) + " must be a number");
    return v.get<double>();
}

std::string text(const json& v, std::string_view what) {
    if (!v.is_string()) throw ValidationError("config: " + std::string(what) + " must be a string");
    return v.get<std::string>();
}

Binding parse_fixed(const json& v) {
    if (!v.is_object()) throw ValidationError("config: 'fixed' must be an object");
    Binding out;
    for (const auto& [name, value] : v.items()) out[name] = number(value, "fixed." + name);
    return out;
}

std::vector<Axis> parse_axes(const json& v) {
    if (!v.is_array()) throw ValidationError("config: 'axes' must be an array");
    std::vector<Axis> out;
    for (const auto& a : v) {
        if (!a.is_object()) throw ValidationError("config: each axis must be an object");
        reject_unknown_keys(a, {"name", "start", "stop", "points"}, "axis");
        for (const char* key : {"name", "start", "stop", "points"}) {
            if (!a.contains(key)) throw ValidationError(std::string("config: axis is missing '") + key + "'");
        }
        Axis axis;
        axis.name = text(a["name"], "axis name");
        axis.start = number(a["start"], "axis start");
        axis.stop = number(a["stop"], "axis stop");
        if (!a["points"].is_number_unsigned()) {
            throw ValidationError("config: points of axis '" + axis.name + "' must be a non-negative integer");
        }
        axis.points = a["points"].get<std::size_t>();
        out.push_back(std::move(axis));
    }
    return out;
}

EvalOptions parse_options(const json& doc) {
    EvalOptions options;
    if (doc.contains("alpha_branch")) options.alpha_branch = parse_alpha_branch(text(doc["alpha_branch"], "alpha_branch"));
    if (doc.contains("tail_epsilon")) options.tail_epsilon = number(doc["tail_epsilon"], "tail_epsilon");
    return options;
}

} // namespace

jc::AlphaBranch parse_alpha_branch(std::string_view name) {
    if (name == "principal") return jc::AlphaBranch::principal;
    if (name == "quadrant") return jc::AlphaBranch::quadrant;
    throw ValidationError("unknown alpha branch '" + std::string(name) + "' (expected principal or quadrant)");
}

SweepConfig parse_sweep_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("config: malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("config: top level must be an object");

    SweepConfig cfg;
    if (doc.contains("output")) cfg.output_path = text(doc["output"], "output");
    if (doc.contains("format")) cfg.format = parse_format(text(doc["format"], "format"));
    const EvalOptions options = parse_options(doc);

    if (doc.contains("preset")) {
        reject_unknown_keys(doc, {"preset", "fixed", "output", "format", "alpha_branch", "tail_epsilon"}, "config");
        FigurePreset preset = figure_preset(text(doc["preset"], "preset"));
        const Binding overrides = doc.contains("fixed") ? parse_fixed(doc["fixed"]) : Binding{};
        for (const auto& [name, value] : overrides) {
            bool used = false;
            for (auto& spec : preset.panels) {
                if (auto it = spec.fixed.find(name); it != spec.fixed.end()) {
                    it->second = value;
                    used = true;
                }
            }
            if (!used) {
                throw ValidationError("config: preset '" + preset.id + "' does not fix parameter '" + name + "'");
            }
        }
        for (auto& spec : preset.panels) {
            spec.options = options;
            spec.validate();
        }
        cfg.panels = std::move(preset.panels);
        return cfg;
    }

    reject_unknown_keys(doc, {"model", "axes", "fixed", "output", "format", "alpha_branch", "tail_epsilon"}, "config");
    if (!doc.contains("model")) throw ValidationError("config: missing 'model' (or 'preset')");
    if (!doc.contains("axes")) throw ValidationError("config: missing 'axes'");
    SweepSpec spec;
    spec.model = parse_model(text(doc["model"], "model"));
    spec.axes = parse_axes(doc["axes"]);
    if (doc.contains("fixed")) spec.fixed = parse_fixed(doc["fixed"]);
    spec.options = options;
    spec.validate();
    cfg.panels.push_back(std::move(spec));
    return cfg;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("config: cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sweep_config(buf.str());
}

} // namespace clockvis::sweep
