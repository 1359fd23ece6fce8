#ifndef LANDAU_QUADRATURE_HPP
#define LANDAU_QUADRATURE_HPP

#include <functional>

#include "landau/landau_states.hpp"

namespace landau {

/**
 * Composite Gauss-Legendre rule on (0, r_max) with panel doubling to
 * convergence. Radii are in units of l_B. Summation runs in ascending
 * panel order at every refinement level, so results are deterministic.
 */
struct RadialQuadrature {
    double r_max;
    int initial_panels  = 8;
    int nodes_per_panel = 16; // only the 16-node rule is implemented
    double tol          = 1e-10;
    int max_doublings   = 12;

    explicit RadialQuadrature(double r_max_, double tol_ = 1e-10);

    // r_max = 2 sqrt(2n+|m|+1) + 10: classical turning point plus a
    // ten-l_B Gaussian tail margin.
    static RadialQuadrature for_mode(const ModeIndex& mode);
    static RadialQuadrature for_pair(const ModeIndex& a, const ModeIndex& b);
};

// integral of f(R) dR over (0, r_max). Throws QuadratureError if doubling
// the panel count still moves the result by more than tol after
// max_doublings refinements.
double radial_integrate(const std::function<double(double)>& f,
                        const RadialQuadrature& quad);

// integral of f(R, phi) R dR dphi over the disk R < r_max. The azimuthal
// direction uses n_phi equally spaced samples (exact for trigonometric
// polynomials of degree < n_phi); the radial direction refines as above.
double disk_integrate(const std::function<double(double, double)>& f,
                      const RadialQuadrature& quad, int n_phi);

} // namespace landau

#endif
