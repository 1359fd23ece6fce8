#include "landau/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "landau/currents.hpp"
#include "landau/field_grid.hpp"
#include "landau/io.hpp"
#include "landau/landau_states.hpp"
#include "landau/lg_beam.hpp"
#include "landau/superposition.hpp"
#include "landau/version.hpp"

namespace landau::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void put_metric(CriterionResult& c, const char* key, double v) {
    c.metrics.emplace_back(key, v);
}

// criterion-1 mode set: n <= 6, m <= n, m >= -6
std::vector<ModeIndex> expectation_modes() {
    std::vector<ModeIndex> modes;
    for (int n = 0; n <= 6; ++n)
        for (int m = -6; m <= n; ++m)
            modes.push_back(ModeIndex::from_nm(n, m));
    return modes;
}

CriterionResult criterion_oam_expectations() {
    const auto t0 = Clock::now();
    CriterionResult c{1, "oam-expectations", false, 0.0, 5.0, {}, {}};
    const PhysicalScales scales;
    double worst_can = 0.0, worst_gauge = 0.0, worst_mech = 0.0;
    for (const ModeIndex& mode : expectation_modes()) {
        const ExpectationReport rep = expectations(mode, scales);
        const double n = mode.n();
        worst_can = std::max(worst_can, std::abs(rep.L_can - mode.m));
        worst_gauge =
            std::max(worst_gauge, std::abs(rep.L_gauge - (2.0 * n + 1.0 - mode.m)));
        worst_mech = std::max(worst_mech, std::abs(rep.L_mech - (2.0 * n + 1.0)));
    }
    put_metric(c, "max_abs_err_L_can", worst_can);
    put_metric(c, "max_abs_err_L_gauge", worst_gauge);
    put_metric(c, "max_abs_err_L_mech", worst_mech);
    const bool ok = worst_can <= 1e-8 && worst_gauge <= 1e-8 && worst_mech <= 1e-8;
    c.elapsed_seconds = seconds_since(t0);
    c.passed = ok && c.elapsed_seconds < c.budget_seconds;
    return c;
}

CriterionResult criterion_density_symmetry() {
    const auto t0 = Clock::now();
    CriterionResult c{2, "density-symmetry", false, 0.0, 5.0, {}, {}};
    const GridSpec grid; // 301 x 301, half width 12 l_B
    const int nm_pairs[3][2] = {{20, 20}, {5, 3}, {1, 1}};
    double worst = 0.0;
    for (const auto& nm : nm_pairs) {
        const ModeIndex mode = ModeIndex::from_nm(nm[0], nm[1]);
        const ModeIndex partner = ModeIndex::from_nm(nm[0] - nm[1], -nm[1]);
        for (int iy = 0; iy < grid.points_per_side; ++iy) {
            const double Y = -grid.half_width +
                             2.0 * grid.half_width * iy / (grid.points_per_side - 1);
            for (int ix = 0; ix < grid.points_per_side; ++ix) {
                const double X = -grid.half_width +
                                 2.0 * grid.half_width * ix /
                                     (grid.points_per_side - 1);
                const double R = std::hypot(X, Y);
                worst = std::max(worst, std::abs(rho_tilde(mode, R) -
                                                 rho_tilde(partner, R)));
            }
        }
    }
    put_metric(c, "max_abs_density_diff", worst);
    c.elapsed_seconds = seconds_since(t0);
    c.passed = worst < 1e-10 && c.elapsed_seconds < c.budget_seconds;
    return c;
}

CriterionResult criterion_three_fold_splitting() {
    const auto t0 = Clock::now();
    CriterionResult c{3, "three-fold-splitting", false, 0.0, 1.0, {}, {}};
    const PhysicalScales scales;
    double worst = 0.0;
    for (int p : {0, 1}) {
        for (int m : {-20, 0, 20}) {
            const double analytic = (m < 0) ? 0.0 : (m == 0 ? 1.0 : 2.0);
            const double quad = mean_angular_velocity(ModeIndex(p, m), scales);
            worst = std::max(worst, std::abs(quad - analytic));
        }
    }
    put_metric(c, "max_abs_err_omega_bar", worst);
    c.elapsed_seconds = seconds_since(t0);
    c.passed = worst <= 1e-8 && c.elapsed_seconds < c.budget_seconds;
    return c;
}

CriterionResult criterion_energy_identities() {
    const auto t0 = Clock::now();
    CriterionResult c{4, "energy-identities", false, 0.0, 10.0, {}, {}};
    const PhysicalScales scales;
    double worst_virial = 0.0, worst_moment = 0.0;
    for (const ModeIndex& mode : expectation_modes()) {
        const ExpectationReport rep = expectations(mode, scales);
        const double e_osc = rep.E_osc_kinetic + rep.E_osc_potential;
        worst_virial = std::max(
            worst_virial,
            std::abs(rep.E_osc_kinetic - rep.E_osc_potential) / e_osc);
        const double e_total = 2.0 * mode.n() + 1.0;
        worst_moment = std::max(worst_moment,
                                std::abs(rep.B_dot_mu - e_total) / e_total);
    }
    put_metric(c, "max_rel_virial_gap", worst_virial);
    put_metric(c, "max_rel_err_B_dot_mu", worst_moment);
    c.elapsed_seconds = seconds_since(t0);
    c.passed = worst_virial < 1e-7 && worst_moment < 1e-7 &&
               c.elapsed_seconds < c.budget_seconds;
    return c;
}

CriterionResult criterion_rotation_tables() {
    const auto t0 = Clock::now();
    CriterionResult c{5, "rotation-tables", false, 0.0, 30.0, {}, {}};
    const PhysicalScales scales;

    struct Row {
        int m1, m2;
        double expected;
    };
    std::vector<Row> rows;
    for (int k = 1; k <= 8; ++k) {
        rows.push_back({k, -k, 1.0});
        rows.push_back({0, k, 2.0});
        rows.push_back({0, -k, 0.0});
        rows.push_back({1, -k, 2.0 / (k + 1.0)});
        rows.push_back({-1, k, 2.0 * k / (k + 1.0)});
    }

    double worst = 0.0;
    for (const Row& row : rows) {
        const SuperpositionSpec spec = SuperpositionSpec::with_default_mixing(
            ModeIndex(0, row.m1), ModeIndex(0, row.m2));
        const std::vector<double> zs = tracking_z_samples(spec, 4);
        const double measured = measured_rotation_rate(spec, scales, zs);
        worst = std::max(worst, std::abs(measured - row.expected));
    }
    put_metric(c, "pairs_checked", static_cast<double>(rows.size()));
    put_metric(c, "max_abs_err_rate", worst);
    c.elapsed_seconds = seconds_since(t0);
    c.passed = worst <= 1e-6 && c.elapsed_seconds < c.budget_seconds;
    return c;
}

CriterionResult criterion_centroid_dynamics() {
    const auto t0 = Clock::now();
    CriterionResult c{6, "centroid-dynamics", false, 0.0, 10.0, {}, {}};
    const PhysicalScales scales;

    // |m1 - m2| = 2: centroid pinned to the origin
    double worst_null = 0.0;
    for (int m2 : {2, -2}) {
        const SuperpositionSpec spec = SuperpositionSpec::with_default_mixing(
            ModeIndex(0, 0), ModeIndex(0, m2));
        for (double Z : {0.0, 0.4, 0.8}) {
            const CentroidSample s = centroid(spec, scales, Z);
            worst_null = std::max(worst_null, std::hypot(s.X_bar, s.Y_bar));
        }
    }

    // (0, +1): centroid spirals at the cyclotron rate
    const SuperpositionSpec plus = SuperpositionSpec::with_default_mixing(
        ModeIndex(0, 0), ModeIndex(0, 1));
    const double z_samples[4] = {0.0, 0.2, 0.4, 0.6};
    double angles[4];
    for (int i = 0; i < 4; ++i) {
        const CentroidSample s = centroid(plus, scales, z_samples[i]);
        angles[i] = std::atan2(s.Y_bar, s.X_bar);
        if (i > 0)
            angles[i] += 2.0 * std::numbers::pi *
                         std::round((angles[i - 1] - angles[i]) /
                                    (2.0 * std::numbers::pi));
    }
    double zm = 0.0, am = 0.0;
    for (int i = 0; i < 4; ++i) {
        zm += z_samples[i];
        am += angles[i];
    }
    zm /= 4.0;
    am /= 4.0;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 4; ++i) {
        num += (z_samples[i] - zm) * (angles[i] - am);
        den += (z_samples[i] - zm) * (z_samples[i] - zm);
    }
    const double slope = num / den;

    // (0, -1): centroid holds still on the x-axis
    const SuperpositionSpec minus = SuperpositionSpec::with_default_mixing(
        ModeIndex(0, 0), ModeIndex(0, -1));
    const CentroidSample ref = centroid(minus, scales, 0.0);
    double worst_drift = 0.0;
    for (double Z : {0.3, 0.6, 0.9, 1.2}) {
        const CentroidSample s = centroid(minus, scales, Z);
        worst_drift = std::max(
            worst_drift, std::hypot(s.X_bar - ref.X_bar, s.Y_bar - ref.Y_bar));
    }

    put_metric(c, "max_null_centroid_norm", worst_null);
    put_metric(c, "spiral_slope", slope);
    put_metric(c, "max_rectilinear_drift", worst_drift);
    c.elapsed_seconds = seconds_since(t0);
    c.passed = worst_null < 1e-10 && std::abs(slope - 2.0) <= 1e-4 &&
               worst_drift < 1e-8 && c.elapsed_seconds < c.budget_seconds;
    return c;
}

CriterionResult criterion_inverse_square_moment() {
    const auto t0 = Clock::now();
    CriterionResult c{7, "inverse-square-moment", false, 0.0, 2.0, {}, {}};
    const PhysicalScales scales;
    double worst = 0.0;
    for (int p = 0; p <= 4; ++p) {
        for (int am = 1; am <= 8; ++am) {
            for (int m : {am, -am}) {
                const double moment =
                    inverse_square_moment(ModeIndex(p, m), scales);
                const double expected = 1.0 / (2.0 * am);
                worst = std::max(worst,
                                 std::abs(moment - expected) / expected);
            }
        }
    }
    put_metric(c, "max_rel_err", worst);
    c.elapsed_seconds = seconds_since(t0);
    c.passed = worst < 1e-8 && c.elapsed_seconds < c.budget_seconds;
    return c;
}

CriterionResult criterion_gouy_contrast() {
    const auto t0 = Clock::now();
    CriterionResult c{8, "gouy-contrast", false, 0.0, 1.0, {}, {}};
    PhysicalScales scales;
    scales.set_longitudinal_length(1.0);
    bool ok = true;
    for (int p = 0; p <= 3; ++p) {
        for (int m = -3; m <= 3; ++m) {
            const ModeIndex mode(p, m);
            // diffractive side: jump depends on 2p+|m|+1 alone
            const double jump = gouy_total_jump(mode);
            if (jump != -(2.0 * p + std::abs(m) + 1.0) * std::numbers::pi)
                ok = false;
            // nondiffractive side: phase rate depends on 2n+1 alone
            const LongitudinalPhase lp = longitudinal_phase(mode, scales, 0.0);
            if (lp.delta_kz * *scales.z_m != -(2.0 * mode.n() + 1.0))
                ok = false;
        }
    }
    put_metric(c, "modes_tabulated", 4.0 * 7.0);
    put_metric(c, "exact", ok ? 1.0 : 0.0);
    c.elapsed_seconds = seconds_since(t0);
    c.passed = ok && c.elapsed_seconds < c.budget_seconds;
    return c;
}

CriterionResult criterion_waist_match() {
    const auto t0 = Clock::now();
    CriterionResult c{9, "waist-match", false, 0.0, 2.0, {}, {}};
    const PhysicalScales scales;
    const int pm_pairs[2][2] = {{0, 1}, {1, 2}};
    double worst = 0.0;
    for (const auto& pm : pm_pairs) {
        const ModeIndex mode(pm[0], pm[1]);
        const LGParams params(scales.w_m, 50.0);
        for (double r = 0.0; r <= 8.0; r += 0.05) {
            for (double phi : {0.0, 1.2}) {
                const std::complex<double> lg =
                    lg_amplitude(mode, params, r, phi, 0.0);
                const double lg_density = std::norm(lg);
                const double landau_density =
                    rho_tilde(mode, r / scales.l_B) / (scales.l_B * scales.l_B);
                worst = std::max(worst, std::abs(lg_density - landau_density));
            }
        }
    }
    put_metric(c, "max_abs_density_diff", worst);
    c.elapsed_seconds = seconds_since(t0);
    c.passed = worst <= 1e-10 && c.elapsed_seconds < c.budget_seconds;
    return c;
}

std::vector<CriterionResult> run_numeric_criteria() {
    std::vector<CriterionResult> out;
    out.push_back(criterion_oam_expectations());
    out.push_back(criterion_density_symmetry());
    out.push_back(criterion_three_fold_splitting());
    out.push_back(criterion_energy_identities());
    out.push_back(criterion_rotation_tables());
    out.push_back(criterion_centroid_dynamics());
    out.push_back(criterion_inverse_square_moment());
    out.push_back(criterion_gouy_contrast());
    out.push_back(criterion_waist_match());
    return out;
}

io::Json criterion_json(const CriterionResult& c) {
    io::Json j = io::Json::object();
    j.set("id", io::Json::integer(c.id));
    j.set("name", io::Json::string(c.name));
    j.set("passed", io::Json::boolean(c.passed));
    io::Json metrics = io::Json::object();
    for (const auto& [key, value] : c.metrics)
        metrics.set(key, io::Json::number(value));
    j.set("metrics", std::move(metrics));
    if (!c.note.empty())
        j.set("note", io::Json::string(c.note));
    return j;
}

// timings are intentionally absent: the report must be byte-identical
// between runs
std::string numeric_report(const std::vector<CriterionResult>& cs) {
    io::Json criteria = io::Json::array();
    for (const CriterionResult& c : cs)
        criteria.push_back(criterion_json(c));
    io::Json root = io::Json::object();
    root.set("tool_version", io::Json::string(kToolVersion));
    root.set("criteria", std::move(criteria));
    return root.dump();
}

} // namespace

SuiteResult run_suite() {
    SuiteResult out;
    out.criteria = run_numeric_criteria();

    const auto t0 = Clock::now();
    const std::string first = numeric_report(out.criteria);
    const std::string second = numeric_report(run_numeric_criteria());
    CriterionResult c10{10, "determinism", first == second, 0.0, 0.0, {}, {}};
    put_metric(c10, "reports_identical", c10.passed ? 1.0 : 0.0);
    c10.elapsed_seconds = seconds_since(t0);
    out.criteria.push_back(c10);

    out.all_passed = true;
    for (const CriterionResult& c : out.criteria)
        out.all_passed = out.all_passed && c.passed;

    io::Json criteria = io::Json::array();
    for (const CriterionResult& c : out.criteria)
        criteria.push_back(criterion_json(c));
    io::Json root = io::Json::object();
    root.set("tool_version", io::Json::string(kToolVersion));
    root.set("all_passed", io::Json::boolean(out.all_passed));
    root.set("criteria", std::move(criteria));
    out.report_json = root.dump();
    return out;
}

std::string console_line(const CriterionResult& c) {
    char buf[160];
    std::string metric;
    if (!c.metrics.empty()) {
        char mbuf[64];
        std::snprintf(mbuf, sizeof(mbuf), "%s=%.3g", c.metrics.back().first.c_str(),
                      c.metrics.back().second);
        metric = mbuf;
    }
    std::snprintf(buf, sizeof(buf), "%s %2d %-22s %-32s %6.2fs",
                  c.passed ? "PASS" : "FAIL", c.id, c.name.c_str(),
                  metric.c_str(), c.elapsed_seconds);
    return buf;
}

} // namespace landau::acceptance
