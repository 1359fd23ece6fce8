#ifndef LANDAU_LG_BEAM_HPP
#define LANDAU_LG_BEAM_HPP

#include <complex>

#include "landau/landau_states.hpp"

namespace landau {

// Free-space paraxial Laguerre-Gauss beam parameters.
struct LGParams {
    double w0;  // waist
    double k;   // longitudinal wavenumber
    double z_R; // Rayleigh length k w0^2 / 2

    LGParams(double w0_, double k_);
};

// w(z) = w0 sqrt(1 + (z/z_R)^2)
double beam_width(const LGParams& params, double z);

// 1/R(z) = z / (z^2 + z_R^2); finite everywhere, zero at the waist.
double inverse_curvature(const LGParams& params, double z);

// Gouy phase -(2p+|m|+1) arctan(z/z_R); odd in z.
double gouy_phase(const ModeIndex& mode, const LGParams& params, double z);

// Total Gouy jump across the waist, -(2p+|m|+1) pi.
double gouy_total_jump(const ModeIndex& mode);

/**
 * Normalized paraxial LG mode,
 *   C (w0/w) (sqrt(2) r/w)^{|m|} L_p^{|m|}(2r^2/w^2) e^{-r^2/w^2}
 *   e^{i(m phi + k z + k r^2/(2R(z)) + Phi_G)},
 * with C fixed so the transverse norm is one. At the waist with w0 = w_m
 * the intensity coincides pointwise with the Landau density of the same
 * (p, m).
 */
std::complex<double> lg_amplitude(const ModeIndex& mode, const LGParams& params,
                                  double r, double phi, double z);

} // namespace landau

#endif
