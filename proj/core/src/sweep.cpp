#include "clockvis/sweep.hpp"

#include "clockvis/channels.hpp"
#include "clockvis/errors.hpp"
#include "clockvis/interferometer.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <ostream>
#include <set>
#include <thread>

namespace clockvis::sweep {

namespace {

using NameSet = std::set<std::string, std::less<>>;

const NameSet& allowed_names(Model model) {
    static const NameSet noiseless{"delta_e", "delta_tau", "tau1", "tau2", "lambda"};
    static const NameSet jc{"delta_e", "omega", "lambda", "delta_tau", "tau1", "tau2"};
    static const NameSet jc_thermal{"delta_e", "omega", "lambda", "delta_tau", "tau1", "tau2", "temperature"};
    static const NameSet channel{"delta_e", "delta_tau", "tau1", "tau2", "lambda", "lambda1", "lambda2", "p1", "p2"};
    switch (model) {
    case Model::noiseless: return noiseless;
    case Model::jc: return jc;
    case Model::jc_thermal: return jc_thermal;
    case Model::ad:
    case Model::pd:
    case Model::dp: return channel;
    }
    return noiseless;
}

bool is_channel(Model model) { return model == Model::ad || model == Model::pd || model == Model::dp; }

channels::ChannelKind channel_kind(Model model) {
    switch (model) {
    case Model::pd: return channels::ChannelKind::pd;
    case Model::dp: return channels::ChannelKind::dp;
    default: return channels::ChannelKind::ad;
    }
}

std::string quoted(std::string_view name) { return "'" + std::string(name) + "'"; }

void require(const NameSet& names, std::string_view name, Model model) {
    if (!names.contains(name)) {
        throw ValidationError("model '" + std::string(to_string(model)) + "' requires parameter " + quoted(name));
    }
}

void forbid_together(const NameSet& names, std::string_view a, std::string_view b) {
    if (names.contains(a) && names.contains(b)) {
        throw ValidationError("parameter " + quoted(a) + " conflicts with " + quoted(b));
    }
}

// Structural checks that only depend on which names are bound.
void check_names(Model model, const NameSet& names) {
    const auto& known = parameter_names();
    const NameSet& allowed = allowed_names(model);
    for (const auto& name : names) {
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            throw ValidationError("unknown parameter " + quoted(name));
        }
        if (!allowed.contains(name)) {
            throw ValidationError("parameter " + quoted(name) + " does not apply to model '" +
                                  std::string(to_string(model)) + "'");
        }
    }

    require(names, "delta_e", model);
    if (model == Model::jc || model == Model::jc_thermal) {
        require(names, "omega", model);
        require(names, "lambda", model);
    }
    if (model == Model::jc_thermal) require(names, "temperature", model);

    forbid_together(names, "delta_tau", "tau1");
    forbid_together(names, "delta_tau", "tau2");
    if (!names.contains("delta_tau")) {
        if (!names.contains("tau1") && !names.contains("tau2")) {
            throw ValidationError("model '" + std::string(to_string(model)) +
                                  "' requires parameter 'delta_tau' (or 'tau1' and 'tau2')");
        }
        require(names, "tau1", model);
        require(names, "tau2", model);
    }

    if (is_channel(model)) {
        forbid_together(names, "lambda", "lambda1");
        forbid_together(names, "lambda", "lambda2");
        forbid_together(names, "lambda", "p1");
        forbid_together(names, "lambda", "p2");
        forbid_together(names, "lambda1", "p1");
        forbid_together(names, "lambda1", "p2");
        forbid_together(names, "lambda2", "p1");
        forbid_together(names, "lambda2", "p2");
        if (names.contains("lambda1") || names.contains("lambda2")) {
            require(names, "lambda1", model);
            require(names, "lambda2", model);
        } else if (names.contains("p1") || names.contains("p2")) {
            require(names, "p1", model);
            require(names, "p2", model);
            if (names.contains("delta_tau")) {
                throw ValidationError("parameters 'p1'/'p2' need explicit 'tau1' and 'tau2' instead of 'delta_tau'");
            }
        } else {
            require(names, "lambda", model);
        }
    }
}

NameSet names_of(const Binding& binding) {
    NameSet out;
    for (const auto& [name, value] : binding) out.insert(name);
    return out;
}

std::optional<double> lookup(const Binding& binding, std::string_view name) {
    if (const auto it = binding.find(name); it != binding.end()) return it->second;
    return std::nullopt;
}

} // namespace

std::string_view to_string(Model model) noexcept {
    switch (model) {
    case Model::noiseless: return "noiseless";
    case Model::jc: return "jc";
    case Model::jc_thermal: return "jc_thermal";
    case Model::ad: return "ad";
    case Model::pd: return "pd";
    case Model::dp: return "dp";
    }
    return "?";
}

Model parse_model(std::string_view name) {
    for (Model m : {Model::noiseless, Model::jc, Model::jc_thermal, Model::ad, Model::pd, Model::dp}) {
        if (to_string(m) == name) return m;
    }
    throw ValidationError("unknown model '" + std::string(name) +
                          "' (expected noiseless, jc, jc_thermal, ad, pd or dp)");
}

std::string_view to_string(OutputFormat format) noexcept { return format == OutputFormat::csv ? "csv" : "json"; }

OutputFormat parse_format(std::string_view name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw ValidationError("unknown output format '" + std::string(name) + "' (expected csv or json)");
}

const std::vector<std::string>& parameter_names() {
    static const std::vector<std::string> names{"delta_e", "omega", "lambda",      "lambda1", "lambda2", "delta_tau",
                                                "temperature", "p1", "p2", "tau1", "tau2"};
    return names;
}

double Axis::value(std::size_t i) const {
    if (i + 1 >= points) return stop;
    return start + (stop - start) * (static_cast<double>(i) / static_cast<double>(points - 1));
}

void SweepSpec::validate() const {
    if (axes.empty() || axes.size() > 2) {
        throw ValidationError("sweep needs one or two axes (got " + std::to_string(axes.size()) + ")");
    }
    NameSet names;
    const auto bind = [&names](const std::string& name) {
        if (!names.insert(name).second) throw ValidationError("parameter " + quoted(name) + " is bound more than once");
    };
    for (const auto& axis : axes) {
        bind(axis.name);
        if (!std::isfinite(axis.start) || !std::isfinite(axis.stop)) {
            throw ValidationError("axis " + quoted(axis.name) + " has non-finite bounds");
        }
        if (axis.points < 2) throw ValidationError("axis " + quoted(axis.name) + " needs at least 2 points");
    }
    for (const auto& [name, value] : fixed) {
        bind(name);
        if (!std::isfinite(value)) throw ValidationError("parameter " + quoted(name) + " is not finite");
    }
    check_names(model, names);
    if (!(options.tail_epsilon > 0.0) || options.tail_epsilon > 1.0) {
        throw ValidationError("tail_epsilon must lie in (0, 1]");
    }
}

std::size_t SweepSpec::point_count() const {
    std::size_t n = 1;
    for (const auto& axis : axes) n *= axis.points;
    return n;
}

Binding SweepSpec::point(std::size_t index) const {
    Binding b = fixed;
    // Row-major: the last axis varies fastest.
    for (std::size_t k = axes.size(); k-- > 0;) {
        const Axis& axis = axes[k];
        b[axis.name] = axis.value(index % axis.points);
        index /= axis.points;
    }
    return b;
}

SweepRecord evaluate_point(Model model, const Binding& binding, const EvalOptions& options) {
    check_names(model, names_of(binding));
    for (const auto& [name, value] : binding) {
        if (!std::isfinite(value)) throw ValidationError("parameter " + quoted(name) + " is not finite");
    }

    SweepRecord rec;
    rec.model = model;
    rec.delta_e = lookup(binding, "delta_e");
    rec.p1 = lookup(binding, "p1");
    rec.p2 = lookup(binding, "p2");

    // Timing: arm 1 at tau1, arm 2 at tau2.
    double tau1 = 0.0;
    double tau2 = 0.0;
    if (const auto dt = lookup(binding, "delta_tau")) {
        tau1 = *dt < 0.0 ? -*dt : 0.0;
        tau2 = *dt < 0.0 ? 0.0 : *dt;
        rec.delta_tau = *dt;
    } else {
        tau1 = binding.at("tau1");
        tau2 = binding.at("tau2");
        rec.tau1 = tau1;
        rec.tau2 = tau2;
        rec.delta_tau = tau2 - tau1;
    }
    const double delta_tau = *rec.delta_tau;
    const double delta_e = *rec.delta_e;

    switch (model) {
    case Model::noiseless: {
        if (const auto lam = lookup(binding, "lambda")) rec.lambda1 = rec.lambda2 = *lam;
        rec.kappa = noiseless_overlap(ClockSpec::with_gap(delta_e), delta_tau);
        break;
    }
    case Model::jc:
    case Model::jc_thermal: {
        jc::JcParams params;
        params.delta_e = delta_e;
        params.omega = binding.at("omega");
        params.lambda = binding.at("lambda");
        params.n_cutoff = 1;
        params.alpha_branch = options.alpha_branch;
        rec.omega = params.omega;
        rec.lambda1 = rec.lambda2 = params.lambda;
        if (model == Model::jc) {
            rec.kappa = jc::jc_overlap_analytic(params, delta_tau);
        } else {
            const jc::ThermalParams thermal{binding.at("temperature"), options.tail_epsilon};
            rec.temperature = thermal.temperature;
            rec.kappa = jc::jc_thermal_overlap(params, thermal, delta_tau);
        }
        break;
    }
    case Model::ad:
    case Model::pd:
    case Model::dp: {
        double lambda1 = 0.0;
        double lambda2 = 0.0;
        if (const auto lam = lookup(binding, "lambda")) {
            lambda1 = lambda2 = *lam;
        } else if (rec.p1) {
            lambda1 = channels::lambda_from_probability(*rec.p1, tau1);
            lambda2 = channels::lambda_from_probability(*rec.p2, tau2);
        } else {
            lambda1 = binding.at("lambda1");
            lambda2 = binding.at("lambda2");
        }
        rec.lambda1 = lambda1;
        rec.lambda2 = lambda2;
        rec.tau1 = tau1;
        rec.tau2 = tau2;

        const ClockSpec clock = ClockSpec::with_gap(delta_e);
        if (model == Model::ad && lambda1 == lambda2) {
            rec.kappa = channels::ad_overlap_analytic(clock, lambda1, tau1, tau2);
        } else if (model == Model::pd && lambda1 == lambda2) {
            rec.kappa = channels::pd_overlap_analytic(clock, lambda1, tau1, tau2);
        } else {
            rec.kappa = channels::two_arm_visibility(clock, channel_kind(model), ArmConfig{tau1, lambda1, 0.0},
                                                     ArmConfig{tau2, lambda2, 0.0})
                            .kappa;
        }
        break;
    }
    }

    rec.visibility = std::abs(rec.kappa);
    if (!(rec.visibility <= 1.0 + 1e-12)) {
        throw std::logic_error("evaluate_point: visibility " + format_number(rec.visibility) + " exceeds 1");
    }
    return rec;
}

std::size_t default_thread_count() {
    if (const char* env = std::getenv("VISIBILITY_THREADS"); env != nullptr && *env != '\0') {
        std::size_t value = 0;
        const char* end = env + std::char_traits<char>::length(env);
        const auto [ptr, ec] = std::from_chars(env, end, value);
        if (ec != std::errc{} || ptr != end || value == 0) {
            throw ValidationError("VISIBILITY_THREADS must be a positive integer (got '" + std::string(env) + "')");
        }
        return value;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec, const RunOptions& run) {
    spec.validate();
    const std::size_t total = spec.point_count();
    std::vector<SweepRecord> records(total);
    std::vector<std::exception_ptr> errors(total);

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    const auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < total && !failed.load(); i = next.fetch_add(1)) {
            try {
                records[i] = evaluate_point(spec.model, spec.point(i), spec.options);
            } catch (...) {
                errors[i] = std::current_exception();
                failed.store(true);
            }
        }
    };

    const std::size_t threads = std::min(total, run.threads == 0 ? default_thread_count() : run.threads);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
    return records;
}

std::string format_number(double value) {
    if (value == 0.0) return "0"; // also folds -0
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw std::logic_error("format_number: conversion failed");
    return std::string(buf, ptr);
}

namespace {

void csv_field(std::ostream& out, const std::optional<double>& v) {
    out << ',';
    if (v) out << format_number(*v);
}

void json_field(std::ostream& out, std::string_view key, const std::optional<double>& v) {
    out << ",\"" << key << "\":" << (v ? format_number(*v) : std::string("null"));
}

} // namespace

void write_csv(std::ostream& out, std::span<const SweepRecord> records, bool header) {
    if (header) out << kCsvHeader << '\n';
    for (const auto& r : records) {
        out << to_string(r.model);
        csv_field(out, r.delta_e);
        csv_field(out, r.omega);
        csv_field(out, r.lambda1);
        csv_field(out, r.lambda2);
        csv_field(out, r.delta_tau);
        csv_field(out, r.temperature);
        csv_field(out, r.p1);
        csv_field(out, r.p2);
        csv_field(out, r.tau1);
        csv_field(out, r.tau2);
        out << ',' << format_number(r.kappa.real()) << ',' << format_number(r.kappa.imag()) << ','
            << format_number(r.visibility) << '\n';
    }
}

void write_json(std::ostream& out, std::span<const SweepRecord> records) {
    out << "[";
    bool first = true;
    for (const auto& r : records) {
        out << (first ? "\n" : ",\n") << "{\"model\":\"" << to_string(r.model) << '"';
        first = false;
        json_field(out, "delta_e", r.delta_e);
        json_field(out, "omega", r.omega);
        json_field(out, "lambda1", r.lambda1);
        json_field(out, "lambda2", r.lambda2);
        json_field(out, "delta_tau", r.delta_tau);
        json_field(out, "temperature", r.temperature);
        json_field(out, "p1", r.p1);
        json_field(out, "p2", r.p2);
        json_field(out, "tau1", r.tau1);
        json_field(out, "tau2", r.tau2);
        json_field(out, "kappa_re", r.kappa.real());
        json_field(out, "kappa_im", r.kappa.imag());
        json_field(out, "visibility", r.visibility);
        out << '}';
    }
    out << (first ? "]\n" : "\n]\n");
}

void write_records(std::ostream& out, std::span<const SweepRecord> records, OutputFormat format) {
    if (format == OutputFormat::csv) {
        write_csv(out, records);
    } else {
        write_json(out, records);
    }
}

} // namespace clockvis::sweep
