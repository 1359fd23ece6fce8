#ifndef LANDAU_CURRENTS_HPP
#define LANDAU_CURRENTS_HPP

#include "landau/landau_states.hpp"

namespace landau {

/**
 * Probability density and azimuthal current split into the canonical
 * (gradient) part and the gauge (vector-potential) part:
 *   j_can_phi = (m/R) rho,   j_gauge_phi = (R/2) rho.
 * All fields dimensionless: rho is l_B^2-scaled, currents m_e l_B^3-scaled,
 * omega_local is j_phi/(r rho) in units of omega_L.
 */
struct CurrentDecomposition {
    double rho;
    double j_can_phi;
    double j_gauge_phi;
    double j_total_phi;
    double omega_local;
};

CurrentDecomposition decompose_current(const ModeIndex& mode,
                                       const PhysicalScales& scales, double r);

// rho-weighted mean angular velocity in units of omega_L, by quadrature of
// omega(r) = j_phi(r)/r over the plane. Note omega(r) already carries a
// factor of rho through j_phi, so the plane integral is a weighted mean,
// not a bare angular average. Analytic value: 0 (m<0), 1 (m=0), 2 (m>0).
double mean_angular_velocity(const ModeIndex& mode,
                             const PhysicalScales& scales);

// OAM densities (l_B^2-scaled): l_can = m rho, l_gauge = (R^2/2) rho,
// l_mech their sum. At r = 0 the analytic limits apply (all vanish).
struct OamDensities {
    double l_can;
    double l_gauge;
    double l_mech;
};

OamDensities oam_densities(const ModeIndex& mode, const PhysicalScales& scales,
                           double r);

/**
 * Per-mode scalar expectations. OAM values are in units of hbar, energies in
 * units of omega_L. Closed forms they must reproduce:
 *   L_can = m, L_gauge = 2n+1-m, L_mech = 2n+1,
 *   E_osc_kinetic = E_osc_potential = (2p+|m|+1)/2   (virial),
 *   E_Zeeman = m,  B_dot_mu = 2n+1 = <H>.
 * Kinetic energy integrates analytic radial derivatives (Laguerre
 * derivative identity); the potential side is an independent moment of rho.
 */
struct ExpectationReport {
    double L_can;
    double L_gauge;
    double L_mech;
    double E_osc_kinetic;
    double E_osc_potential;
    double E_Zeeman;
    double B_dot_mu;
};

ExpectationReport expectations(const ModeIndex& mode,
                               const PhysicalScales& scales);

// 2 pi Integral of (rho_tilde / R) dR; equals 1/(2|m|) for every p. Used by
// the mean-angular-velocity closed form. Requires m != 0.
double inverse_square_moment(const ModeIndex& mode,
                             const PhysicalScales& scales);

} // namespace landau

#endif
