#ifndef LANDAU_STATES_HPP
#define LANDAU_STATES_HPP

#include <complex>
#include <optional>

namespace landau {

/**
 * Quantum numbers of a symmetric-gauge Landau level.
 *
 * p is the number of radial nodes, m the azimuthal (magnetic) quantum
 * number. The Landau quantum number n = p + (|m|+m)/2 satisfies m <= n;
 * the (p,m) <-> (n,m) round trip is the identity.
 */
struct ModeIndex {
    int p;
    int m;

    ModeIndex(int p_, int m_);
    static ModeIndex from_nm(int n, int m);

    int n() const { return p + (m > 0 ? m : 0); }
    bool operator==(const ModeIndex&) const = default;
};

/**
 * Magnetic field, electron mass and charge, with every derived scale of the
 * problem: the magnetic length l_B = 1/sqrt(eB), the oscillator length
 * b = sqrt(2) l_B, the transverse beam width w_m = 2 l_B, the cyclotron and
 * Larmor frequencies, and optionally the longitudinal Larmor length z_m.
 *
 * Immutable by convention: configure once, then share freely across threads.
 */
struct PhysicalScales {
    double B   = 1.0;
    double m_e = 1.0;
    double e   = 1.0;

    double l_B, b, w_m, omega_c, omega_L;
    std::optional<double> z_m;

    explicit PhysicalScales(double B_ = 1.0, double m_e_ = 1.0, double e_ = 1.0);

    PhysicalScales& set_longitudinal_length(double zm);
    PhysicalScales& set_beam_speed(double v);    // z_m = v / omega_L
    PhysicalScales& set_beam_energy(double E);   // z_m = sqrt(E/omega_L) w_m

    // True while the paraxial conditions E_perp << E and w_m << z_m hold
    // (ratio <= 0.1). Requires z_m; never enforced, only reported.
    bool paraxial_ok(const ModeIndex& mode) const;
};

// Eigen-energy split into the 2-D oscillator part and the Zeeman part,
// all in units of omega_L:
//   E_osc = 2p + |m| + 1,  E_Zeeman = m,  E_total = 2n + 1.
struct EnergyDecomposition {
    double E_osc;
    double E_Zeeman;
    double E_total;
};

// Dimensionless Landau-beam radial factor
//   sqrt(p!/(p+|m|)!) xi^{|m|/2} e^{-xi/2} L_p^{|m|}(xi),  xi = 2 r^2 / w_m^2,
// normalized so that the square integrates to 1 against d(xi). Carries no
// (-1)^p; this is the convention the beam-interference formulas use.
double beam_radial_factor(int p, int abs_m, double xi);

// Normalized radial wavefunction R_{p,m}(r), including the (-1)^p sign:
//   (-1)^p (1/b) sqrt(2 p!/(p+|m|)!) e^{-r^2/(2b^2)} (r^2/b^2)^{|m|/2}
//   L_p^{|m|}(r^2/b^2).
// Log-space normalization keeps it stable out to |m| ~ 64.
double radial_wavefunction(const ModeIndex& mode, const PhysicalScales& scales,
                           double r);

// Full eigenfunction e^{i m phi}/sqrt(2 pi) R_{p,m}(r).
std::complex<double> eigenfunction(const ModeIndex& mode,
                                   const PhysicalScales& scales,
                                   double r, double phi);

// Dimensionless probability density l_B^2 |psi|^2 at R = r/l_B.
// Depends on the mode only; scale-free by construction.
double rho_tilde(const ModeIndex& mode, double R);

EnergyDecomposition energy(const ModeIndex& mode);

struct LongitudinalPhase {
    double delta_kz;   // magnetic correction to k_z: -(2n+1)/z_m
    double lzg_phase;  // delta_kz * z
};

// Longitudinal phase of the nondiffractive Landau beam. Requires z_m.
LongitudinalPhase longitudinal_phase(const ModeIndex& mode,
                                     const PhysicalScales& scales, double z);

} // namespace landau

#endif
