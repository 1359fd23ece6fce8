#include "landau/currents.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "landau/quadrature.hpp"
#include "landau/specfun.hpp"

namespace landau {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// d g / d R of the dimensionless radial profile, from the Laguerre
// derivative identity. Evaluated in log space away from the axis; the
// quadrature never lands on R = 0.
double radial_profile_derivative(int p, int abs_m, double R) {
    const double xi = 0.5 * R * R;
    if (xi == 0.0)
        throw std::domain_error("radial_profile_derivative: R must be > 0");
    const LaguerreEval lag = laguerre(p, abs_m, xi);
    const double log_norm = 0.5 * (log_factorial(p) - log_factorial(p + abs_m));
    const double log_xi = std::log(xi);
    const double amp = std::exp(log_norm + 0.5 * abs_m * log_xi - 0.5 * xi);

    // u'(xi) with u = N xi^{|m|/2} e^{-xi/2} L
    double du = amp * (lag.derivative - 0.5 * lag.value);
    if (abs_m > 0) {
        const double amp_lower =
            std::exp(log_norm + (0.5 * abs_m - 1.0) * log_xi - 0.5 * xi);
        du += 0.5 * abs_m * amp_lower * lag.value;
    }
    const double sign = (p % 2 == 0) ? 1.0 : -1.0;
    return sign * du * R; // dxi/dR = R
}

} // namespace

CurrentDecomposition decompose_current(const ModeIndex& mode,
                                       const PhysicalScales& scales, double r) {
    if (!(r > 0.0))
        throw std::domain_error(
            "decompose_current: r must be > 0 (canonical current carries 1/r), "
            "got r=" + std::to_string(r));
    const double R = r / scales.l_B;
    CurrentDecomposition out;
    out.rho = rho_tilde(mode, R);
    out.j_can_phi = (mode.m / R) * out.rho;
    out.j_gauge_phi = 0.5 * R * out.rho;
    out.j_total_phi = out.j_can_phi + out.j_gauge_phi;
    // j_phi/(r rho) in omega_L units, reduced analytically so the far tail
    // does not hit 0/0
    out.omega_local = 1.0 + 2.0 * mode.m / (R * R);
    return out;
}

double mean_angular_velocity(const ModeIndex& mode,
                             const PhysicalScales& /*scales*/) {
    const RadialQuadrature quad = RadialQuadrature::for_mode(mode);
    // omega(r) = j_phi/r integrated over the plane: 2 pi Int j_phi dr,
    // which in omega_L units is 4 pi Int j~_phi dR
    auto integrand = [&](double R) {
        const double rho = rho_tilde(mode, R);
        return (mode.m / R + 0.5 * R) * rho;
    };
    return 4.0 * std::numbers::pi * radial_integrate(integrand, quad);
}

OamDensities oam_densities(const ModeIndex& mode, const PhysicalScales& scales,
                           double r) {
    if (r < 0.0)
        throw std::domain_error("oam_densities: negative radius");
    const double R = r / scales.l_B;
    const double rho = rho_tilde(mode, R);
    OamDensities out;
    out.l_can = mode.m * rho;
    out.l_gauge = 0.5 * R * R * rho;
    out.l_mech = out.l_can + out.l_gauge;
    return out;
}

ExpectationReport expectations(const ModeIndex& mode,
                               const PhysicalScales& scales) {
    const RadialQuadrature quad = RadialQuadrature::for_mode(mode);
    const int abs_m = std::abs(mode.m);

    auto l_can_integrand = [&](double R) {
        return oam_densities(mode, scales, R * scales.l_B).l_can * R;
    };
    auto l_gauge_integrand = [&](double R) {
        return oam_densities(mode, scales, R * scales.l_B).l_gauge * R;
    };
    // kinetic density (g'^2 + m^2 g^2/R^2) R in omega_L units
    auto kinetic_integrand = [&](double R) {
        const double dg = radial_profile_derivative(mode.p, abs_m, R);
        double val = dg * dg * R;
        if (mode.m != 0) {
            const double rho = rho_tilde(mode, R);
            val += kTwoPi * mode.m * mode.m * rho / R;
        }
        return val;
    };

    ExpectationReport out;
    out.L_can = kTwoPi * radial_integrate(l_can_integrand, quad);
    out.L_gauge = kTwoPi * radial_integrate(l_gauge_integrand, quad);
    out.L_mech = out.L_can + out.L_gauge;
    out.E_osc_kinetic = radial_integrate(kinetic_integrand, quad);
    out.E_osc_potential = 0.5 * out.L_gauge; // <R^2>/4 = L_gauge/2
    out.E_Zeeman = out.L_can;
    out.B_dot_mu = out.L_mech;
    return out;
}

double inverse_square_moment(const ModeIndex& mode,
                             const PhysicalScales& /*scales*/) {
    if (mode.m == 0)
        throw std::domain_error(
            "inverse_square_moment: diverges for m = 0 states");
    const RadialQuadrature quad = RadialQuadrature::for_mode(mode);
    auto integrand = [&](double R) { return rho_tilde(mode, R) / R; };
    return kTwoPi * radial_integrate(integrand, quad);
}

} // namespace landau
