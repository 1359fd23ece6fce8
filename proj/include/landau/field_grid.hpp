#ifndef LANDAU_FIELD_GRID_HPP
#define LANDAU_FIELD_GRID_HPP

#include <span>
#include <vector>

#include "landau/landau_states.hpp"
#include "landau/superposition.hpp"

namespace landau {

// One transverse grid point: dimensionless coordinates (units l_B),
// density and Cartesian current components.
struct FieldSample {
    double X;
    double Y;
    double rho;
    double jx;
    double jy;
};

struct GridSpec {
    double half_width   = 12.0; // units of l_B
    int points_per_side = 301;  // odd puts a node at the origin
};

// Row-major samples, Y outer loop ascending, X inner ascending. Currents are
// rotated from polar components; the origin node uses the analytic limits.
std::vector<FieldSample> sample_field(const ModeIndex& mode,
                                      const PhysicalScales& scales,
                                      const GridSpec& grid);

std::vector<FieldSample> sample_field(const SuperpositionSpec& spec,
                                      const PhysicalScales& scales,
                                      const GridSpec& grid, double Z);

struct RingPoint {
    double phi;
    double rho;
};

struct AzimuthalMode {
    double amplitude; // |c_q| with c_q the order-q Fourier coefficient
    double angle;     // pattern angle (location of the maxima), mod 2 pi/q
};

// Discrete azimuthal Fourier analysis of a density ring. Requires at least
// 4*order equally spaced samples covering [0, 2 pi). Throws
// DegeneratePattern when the order-q amplitude is below 1e-12.
AzimuthalMode azimuthal_mode_phase(std::span<const RingPoint> ring, int order);

} // namespace landau

#endif
