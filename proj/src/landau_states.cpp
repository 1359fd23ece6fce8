#include "landau/landau_states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "landau/specfun.hpp"

namespace landau {

ModeIndex::ModeIndex(int p_, int m_) : p(p_), m(m_) {
    if (p < 0)
        throw std::domain_error("ModeIndex: radial node count p=" +
                                std::to_string(p) + " must be >= 0");
}

ModeIndex ModeIndex::from_nm(int n, int m) {
    if (m > n)
        throw std::domain_error("ModeIndex: m=" + std::to_string(m) +
                                " exceeds n=" + std::to_string(n));
    const int p = n - (m > 0 ? m : 0);
    if (p < 0)
        throw std::domain_error("ModeIndex: (n=" + std::to_string(n) +
                                ", m=" + std::to_string(m) +
                                ") has negative node count");
    return ModeIndex(p, m);
}

PhysicalScales::PhysicalScales(double B_, double m_e_, double e_)
    : B(B_), m_e(m_e_), e(e_) {
    if (!(B > 0.0) || !(m_e > 0.0) || !(e > 0.0))
        throw std::invalid_argument(
            "PhysicalScales: B, m_e and e must all be positive");
    l_B = 1.0 / std::sqrt(e * B);
    b = std::sqrt(2.0) * l_B;
    w_m = 2.0 * l_B;
    omega_c = e * B / m_e;
    omega_L = 0.5 * omega_c;
}

PhysicalScales& PhysicalScales::set_longitudinal_length(double zm) {
    if (!(zm > 0.0))
        throw std::invalid_argument("PhysicalScales: z_m must be positive");
    z_m = zm;
    return *this;
}

PhysicalScales& PhysicalScales::set_beam_speed(double v) {
    if (!(v > 0.0))
        throw std::invalid_argument("PhysicalScales: beam speed must be positive");
    z_m = v / omega_L;
    return *this;
}

PhysicalScales& PhysicalScales::set_beam_energy(double E) {
    if (!(E > 0.0))
        throw std::invalid_argument("PhysicalScales: beam energy must be positive");
    z_m = std::sqrt(E / omega_L) * w_m;
    return *this;
}

bool PhysicalScales::paraxial_ok(const ModeIndex& mode) const {
    if (!z_m)
        throw std::invalid_argument(
            "PhysicalScales: z_m is unset; supply it (or a beam speed/energy) "
            "before querying the paraxial regime");
    const double ratio_w = w_m / *z_m;
    // E_perp/E = (2n+1) (w_m/z_m)^2 for a beam with this z_m
    const double ratio_e = (2.0 * mode.n() + 1.0) * ratio_w * ratio_w;
    return ratio_w <= 0.1 && ratio_e <= 0.1;
}

double beam_radial_factor(int p, int abs_m, double xi) {
    if (abs_m < 0)
        throw std::domain_error("beam_radial_factor: abs_m must be >= 0");
    if (xi < 0.0)
        throw std::domain_error("beam_radial_factor: xi must be >= 0");

    const double lag = laguerre_value(p, abs_m, xi);
    const double log_norm = 0.5 * (log_factorial(p) - log_factorial(p + abs_m));
    if (xi == 0.0)
        return (abs_m == 0) ? std::exp(log_norm) * lag : 0.0;
    return std::exp(log_norm + 0.5 * abs_m * std::log(xi) - 0.5 * xi) * lag;
}

namespace {

// Dimensionless profile g(R) = l_B R_{p,m}(r), R = r/l_B; integral of
// g^2 R dR is 1.
double radial_profile(int p, int abs_m, double R) {
    const double xi = 0.5 * R * R;
    const double sign = (p % 2 == 0) ? 1.0 : -1.0;
    return sign * beam_radial_factor(p, abs_m, xi);
}

} // namespace

double radial_wavefunction(const ModeIndex& mode, const PhysicalScales& scales,
                           double r) {
    if (r < 0.0)
        throw std::domain_error("radial_wavefunction: negative radius r=" +
                                std::to_string(r));
    return radial_profile(mode.p, std::abs(mode.m), r / scales.l_B) / scales.l_B;
}

std::complex<double> eigenfunction(const ModeIndex& mode,
                                   const PhysicalScales& scales,
                                   double r, double phi) {
    const double radial = radial_wavefunction(mode, scales, r);
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    return norm * radial * std::exp(std::complex<double>(0.0, mode.m * phi));
}

double rho_tilde(const ModeIndex& mode, double R) {
    if (R < 0.0)
        throw std::domain_error("rho_tilde: negative radius");
    const double g = radial_profile(mode.p, std::abs(mode.m), R);
    return g * g / (2.0 * std::numbers::pi);
}

EnergyDecomposition energy(const ModeIndex& mode) {
    EnergyDecomposition out;
    out.E_osc = 2.0 * mode.p + std::abs(mode.m) + 1.0;
    out.E_Zeeman = mode.m;
    out.E_total = out.E_osc + out.E_Zeeman; // = 2n + 1
    return out;
}

LongitudinalPhase longitudinal_phase(const ModeIndex& mode,
                                     const PhysicalScales& scales, double z) {
    if (!scales.z_m)
        throw std::invalid_argument(
            "longitudinal_phase: z_m is unset in PhysicalScales");
    LongitudinalPhase out;
    out.delta_kz = -(2.0 * mode.n() + 1.0) / *scales.z_m;
    out.lzg_phase = out.delta_kz * z;
    return out;
}

} // namespace landau
