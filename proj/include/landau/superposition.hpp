#ifndef LANDAU_SUPERPOSITION_HPP
#define LANDAU_SUPERPOSITION_HPP

#include <span>
#include <vector>

#include "landau/landau_states.hpp"

namespace landau {

// Two-mode Landau-beam superposition with real mixing amplitudes.
// Normalized internally by 1/sqrt(a^2+b^2).
struct SuperpositionSpec {
    ModeIndex mode1;
    ModeIndex mode2;
    double a;
    double b;

    SuperpositionSpec(ModeIndex m1, ModeIndex m2, double a_, double b_);
    static SuperpositionSpec with_default_mixing(ModeIndex m1, ModeIndex m2);
};

struct Mixing {
    double a;
    double b;
};

// The figure-generation mixing rule:
//   a = 1.0 sqrt(|m1|!)/2^{|m1|/2},  b = 2.0 sqrt(|m2|!)/2^{|m2|/2},
// evaluated through log-factorials.
Mixing default_mixing(int m1, int m2);

// Dimensionless density of the superposed beam at propagation distance
// Z = z/z_m. phi-dependence enters only through the interference term
//   cos[(m1-m2) phi - 2(n1-n2) Z],
// so the pattern rigidly rotates at 2(n1-n2)/(m1-m2) omega_L. Valid for
// any radial node counts.
double superposition_density(const SuperpositionSpec& spec,
                             const PhysicalScales& scales,
                             double r, double phi, double Z);

// Dimensionless current components of the superposed beam (closed forms
// exist only for p1 = p2 = 0; anything else throws
// UnsupportedConfiguration). The canonical part acquires a radial
// component proportional to |m1|-|m2|; the gauge part stays azimuthal.
struct SuperpositionCurrents {
    double j_can_r;
    double j_can_phi;
    double j_gauge_phi;
};

SuperpositionCurrents superposition_currents(const SuperpositionSpec& spec,
                                             const PhysicalScales& scales,
                                             double r, double phi, double Z);

// r -> 0 limit of the above. Finite (and generally nonzero) only when
// {|m1|,|m2|} = {0,1}.
SuperpositionCurrents superposition_currents_origin_limit(
    const SuperpositionSpec& spec, const PhysicalScales& scales,
    double phi, double Z);

// Rotation rate of the interference pattern, units of omega_L:
//   2 (n1 - n2) / (m1 - m2).
// Symmetric under mode exchange. Throws std::domain_error when m1 = m2.
double analytic_rotation_rate(const SuperpositionSpec& spec);

struct CentroidSample {
    double Z;
    double X_bar; // units of l_B
    double Y_bar;
};

// Density centroid by two-dimensional quadrature. Nonzero only when
// |m1 - m2| = 1 (dipole selection rule).
CentroidSample centroid(const SuperpositionSpec& spec,
                        const PhysicalScales& scales, double Z);

// Pattern-tracking rotation rate: locates the ring of maximum interference
// contrast, reads the azimuthal Fourier phase of order |m1-m2| at each Z,
// unwraps, and fits angle against Z by least squares. Needs at least three
// distinct Z samples spaced closely enough that the raw Fourier phase moves
// by less than pi between neighbours (see safe_z_spacing).
double measured_rotation_rate(const SuperpositionSpec& spec,
                              const PhysicalScales& scales,
                              std::span<const double> Z_samples);

// Sample spacing guaranteeing unwrap-safe tracking: the raw phase advances
// by at most pi/2 per step when the analytic rate is used as the guess.
double safe_z_spacing(const SuperpositionSpec& spec);

// Convenience: n equally spaced unwrap-safe samples starting at Z = 0.
std::vector<double> tracking_z_samples(const SuperpositionSpec& spec, int n);

} // namespace landau

#endif
