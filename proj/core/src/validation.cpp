#include "clockvis/validation.hpp"

#include "clockvis/channels.hpp"
#include "clockvis/interferometer.hpp"
#include "clockvis/oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

namespace clockvis::validation {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::uint64_t kSeed = 0x5eed'c10c'0001ULL;
constexpr int kOraclePoints = 100;

class Uniform {
public:
    explicit Uniform(std::uint64_t seed) : rng_(seed) {}
    // Fixed-formula draw so the samples do not depend on the standard library.
    double operator()(double lo, double hi) {
        const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

private:
    std::mt19937_64 rng_;
};

Check make_check(std::string name, double measured, double tolerance, std::string detail = {}) {
    return Check{std::move(name), measured, tolerance, measured <= tolerance, std::move(detail)};
}

double jc_oracle_visibility(const jc::JcParams& params, std::size_t fock_n, double delta_tau) {
    jc::JcParams big = params;
    big.n_cutoff = fock_n + 2;
    const ComplexMatrix h = jc::build_jc_hamiltonian(big);
    return oracle::oracle_visibility({h, h, jc::jc_initial_state(big, fock_n), 0.0, delta_tau}).v;
}

double channel_oracle_visibility(channels::ChannelKind kind, const ClockSpec& clock, double lambda, double delta_tau) {
    const ComplexMatrix h = channels::build_channel_hamiltonian(kind, lambda, clock);
    return oracle::oracle_visibility({h, h, product_state(clock, channels::environment_dim(kind)), 0.0, delta_tau}).v;
}

void golden_checks(Report& r, double scale) {
    jc::JcParams p{1.0, 1.1, 0.0, 2, r.alpha_branch};
    const double v_free = jc::jc_visibility_analytic(p, 1.0);
    p.lambda = 1.0;
    const double v_noise = jc::jc_visibility_analytic(p, 1.0);
    const double v_cold = jc::jc_thermal_visibility(p, {0.1, 1e-12}, 1.0);
    const double v_zero = jc::jc_thermal_visibility(p, {0.0, 1e-12}, 1.0);
    const double v_clock = noiseless_visibility(ClockSpec::with_gap(1.0), 1.0);

    r.checks.push_back(make_check("golden.jc_noiseless", std::abs(v_free - 0.8525), 1e-3 * scale,
                                  "V=" + std::to_string(v_free) + " expected 0.8525"));
    r.checks.push_back(make_check("golden.jc_noise", std::abs(v_noise - 0.7999), 1.5e-3 * scale,
                                  "V=" + std::to_string(v_noise) + " expected 0.7999"));
    r.checks.push_back(make_check("golden.jc_drop", std::abs((v_free - v_noise) - 0.0526), 2e-3 * scale,
                                  "drop=" + std::to_string(v_free - v_noise) + " expected 0.0526"));
    r.checks.push_back(make_check("golden.jc_cold_limit", std::abs(v_cold - v_zero), 1e-4,
                                  "V(T=0.1)=" + std::to_string(v_cold) + " V(T->0)=" + std::to_string(v_zero)));
    r.checks.push_back(make_check("golden.noiseless", std::abs(v_clock - 0.8776), 1e-3 * scale,
                                  "V=" + std::to_string(v_clock) + " expected 0.8776"));
}

void oracle_checks(Report& r) {
    Uniform draw(kSeed);
    double jc_err = 0.0;
    double sector_err = 0.0;
    double ad_err = 0.0;
    double pd_err = 0.0;
    for (int i = 0; i < kOraclePoints; ++i) {
        const double de = draw(0.0, 3.0);
        const double w = draw(0.0, 3.0);
        const double lam = draw(0.0, 3.0);
        const double dt = draw(0.0, kTwoPi);
        const auto n = static_cast<std::size_t>(i % 6);

        jc::JcParams p{de, w, lam, 2, r.alpha_branch};
        jc_err = std::max(jc_err, std::abs(jc::jc_visibility_analytic(p, dt) - jc_oracle_visibility(p, 0, dt)));
        sector_err = std::max(sector_err,
                              std::abs(std::abs(jc::jc_sector_overlap(p, n, dt)) - jc_oracle_visibility(p, n, dt)));

        const ClockSpec clock = ClockSpec::with_gap(de);
        ad_err = std::max(ad_err, std::abs(channels::ad_visibility_analytic(clock, lam, 0.0, dt) -
                                           channel_oracle_visibility(channels::ChannelKind::ad, clock, lam, dt)));
        pd_err = std::max(pd_err, std::abs(channels::pd_visibility_analytic(clock, lam, 0.0, dt) -
                                           channel_oracle_visibility(channels::ChannelKind::pd, clock, lam, dt)));
    }
    const std::string pts = std::to_string(kOraclePoints) + " random points, max |delta V|";
    r.checks.push_back(make_check("oracle.jc", jc_err, 1e-10, pts));
    r.checks.push_back(make_check("oracle.jc_thermal_sectors", sector_err, 1e-10, pts + ", sectors n<=5"));
    r.checks.push_back(make_check("oracle.ad", ad_err, 1e-10, pts));
    r.checks.push_back(make_check("oracle.pd", pd_err, 1e-10, pts));
}

void scan_check(Report& r) {
    Uniform draw(kSeed + 1);
    double err = 0.0;
    for (int i = 0; i < 20; ++i) {
        const VisibilityResult res = VisibilityResult::from_overlap(std::polar(draw(0.0, 1.0), draw(-3.0, 3.0)));
        const auto scan = chi_scan(res, draw(0.0, kTwoPi));
        err = std::max(err, std::abs(visibility_from_scan(scan) - res.v));
    }
    r.checks.push_back(make_check("scan.consistency", err, 1e-6, "20 random overlaps, 3601-point scans"));
}

void structural_checks(Report& r) {
    using channels::ChannelKind;
    Uniform draw(kSeed + 2);
    double herm = 0.0;
    double unit = 0.0;
    double identity = 0.0;
    for (ChannelKind kind : {ChannelKind::ad, ChannelKind::pd, ChannelKind::dp}) {
        const auto n = static_cast<Eigen::Index>(channels::environment_dim(kind) * 2);
        identity = std::max(identity, (channels::finite_time_unitary(kind, 0.0) - ComplexMatrix::Identity(n, n))
                                          .cwiseAbs()
                                          .maxCoeff());
        for (int i = 0; i < 10; ++i) {
            const ClockSpec clock = ClockSpec::with_gap(draw(0.0, 3.0));
            const ComplexMatrix h = channels::build_channel_hamiltonian(kind, draw(0.0, 3.0), clock);
            herm = std::max(herm, hermiticity_defect(h));
            unit = std::max(unit, unitarity_defect(evolution_operator(h, draw(0.0, kTwoPi))));
            unit = std::max(unit, unitarity_defect(channels::finite_time_unitary(kind, draw(0.0, 1.0))));
        }
    }
    for (int i = 0; i < 10; ++i) {
        const jc::JcParams p{draw(0.0, 3.0), draw(0.0, 3.0), draw(0.0, 3.0), 6, r.alpha_branch};
        const ComplexMatrix h = jc::build_jc_hamiltonian(p);
        herm = std::max(herm, hermiticity_defect(h));
        unit = std::max(unit, unitarity_defect(evolution_operator(h, draw(0.0, kTwoPi))));
    }
    r.checks.push_back(make_check("structure.hermitian", herm, 1e-12));
    r.checks.push_back(make_check("structure.unitary", unit, 1e-10));
    r.checks.push_back(make_check("structure.identity_at_p0", identity, 0.0));
}

void behaviour_checks(Report& r) {
    using channels::ChannelKind;
    const ClockSpec clock = ClockSpec::with_gap(1.0);

    for (ChannelKind kind : {ChannelKind::ad, ChannelKind::pd, ChannelKind::dp}) {
        const double v0 = channels::two_arm_visibility(clock, kind, {0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}).v;
        double worst = -1.0;
        for (int i = 1; i <= 20; ++i) {
            const double lam = 0.1 * i / 20.0;
            const double v = channels::two_arm_visibility(clock, kind, {0.0, lam, 0.0}, {1.0, lam, 0.0}).v;
            worst = std::max(worst, v - v0);
        }
        r.checks.push_back(Check{"low_noise.monotone." + std::string(channels::to_string(kind)), worst, 0.0,
                                 worst < 0.0, "max V(lambda) - V(0) over lambda in (0, 0.1]"});

        const double ratio = channels::low_noise_factorization_error(kind, clock, 2e-3, 1.0) /
                             channels::low_noise_factorization_error(kind, clock, 1e-3, 1.0);
        r.checks.push_back(Check{"low_noise.factorization." + std::string(channels::to_string(kind)), ratio, 0.5,
                                 std::abs(ratio - 4.0) <= 0.5, "err(2 lambda)/err(lambda) at lambda=1e-3"});
    }

    double sym = 0.0;
    double asym = 0.0;
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            const double p1 = 0.2 * i;
            const double p2 = 0.2 * j;
            const auto v = [&](double pa, double pb, double tau2) {
                return channels::two_arm_visibility(
                           clock, ChannelKind::ad, {1.0, channels::lambda_from_probability(pa, 1.0), 0.0},
                           {tau2, channels::lambda_from_probability(pb, tau2), 0.0})
                    .v;
            };
            sym = std::max(sym, std::abs(v(p1, p2, 1.0) - v(p2, p1, 1.0)));
            asym = std::max(asym, std::abs(v(p1, p2, 2.0) - v(p2, p1, 2.0)));
        }
    }
    r.checks.push_back(make_check("two_arm.ad_symmetric", sym, 1e-10, "tau1=tau2=1, 6x6 p-grid"));
    r.checks.push_back(Check{"two_arm.ad_asymmetric", asym, 1e-3, asym > 1e-3,
                             "tau1=1, tau2=2: max |V(p1,p2)-V(p2,p1)| must exceed the tolerance"});

    const jc::JcParams p{1.0, 1.1, 0.2, 2, r.alpha_branch};
    const double v10 = jc::jc_thermal_visibility(p, {10.0, 1e-12}, 1.0);
    const double v1 = jc::jc_thermal_visibility(p, {1.0, 1e-12}, 1.0);
    const double v0 = jc::jc_thermal_visibility(p, {0.0, 1e-12}, 1.0);
    const double gap = std::min(v1 - v10, v0 - v1);
    r.checks.push_back(Check{"thermal.ordering", gap, 1e-4, gap > 1e-4,
                             "V(T=10)=" + std::to_string(v10) + " V(T=1)=" + std::to_string(v1) +
                                 " V(T->0)=" + std::to_string(v0)});

    double period = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double dt = 0.37 * i;
        period = std::max(period, std::abs(channels::pd_visibility_analytic(clock, 0.25, 0.0, dt) -
                                           channels::pd_visibility_analytic(clock, 0.25, 0.0, dt + 4.0 * std::numbers::pi)));
    }
    r.checks.push_back(make_check("pd.periodicity", period, 1e-10, "delta_e=1, lambda=0.25, period 4 pi"));
}

} // namespace

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Report run_validation(Profile profile, jc::AlphaBranch alpha_branch) {
    Report r;
    r.profile = profile;
    r.alpha_branch = alpha_branch;
    golden_checks(r, profile == Profile::strict ? 0.5 : 1.0);
    oracle_checks(r);
    scan_check(r);
    structural_checks(r);
    behaviour_checks(r);
    return r;
}

void write_report_json(std::ostream& out, const Report& report) {
    nlohmann::ordered_json doc;
    doc["profile"] = report.profile == Profile::strict ? "strict" : "default";
    doc["alpha_branch"] = report.alpha_branch == jc::AlphaBranch::principal ? "principal" : "quadrant";
    doc["passed"] = report.passed();
    auto& checks = doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json j;
        j["name"] = c.name;
        j["passed"] = c.passed;
        j["measured"] = c.measured;
        j["tolerance"] = c.tolerance;
        if (!c.detail.empty()) j["detail"] = c.detail;
        checks.push_back(std::move(j));
    }
    out << doc.dump(2) << '\n';
}

} // namespace clockvis::validation
