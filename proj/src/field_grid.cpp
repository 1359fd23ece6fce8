#include "landau/field_grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "landau/errors.hpp"

namespace landau {

namespace {

void check_grid(const GridSpec& grid) {
    if (grid.points_per_side < 2)
        throw std::invalid_argument("sample_field: need at least 2 points per side");
    if (!(grid.half_width > 0.0))
        throw std::invalid_argument("sample_field: half_width must be positive");
}

double grid_coord(const GridSpec& grid, int i) {
    return -grid.half_width +
           2.0 * grid.half_width * i / (grid.points_per_side - 1);
}

} // namespace

std::vector<FieldSample> sample_field(const ModeIndex& mode,
                                      const PhysicalScales& /*scales*/,
                                      const GridSpec& grid) {
    check_grid(grid);
    std::vector<FieldSample> out;
    out.reserve(static_cast<size_t>(grid.points_per_side) *
                grid.points_per_side);
    for (int iy = 0; iy < grid.points_per_side; ++iy) {
        const double Y = grid_coord(grid, iy);
        for (int ix = 0; ix < grid.points_per_side; ++ix) {
            const double X = grid_coord(grid, ix);
            const double R = std::hypot(X, Y);
            FieldSample s{X, Y, rho_tilde(mode, R), 0.0, 0.0};
            if (R > 0.0) {
                // purely azimuthal: j_phi = (m/R + R/2) rho
                const double j_phi = (mode.m / R + 0.5 * R) * s.rho;
                s.jx = -j_phi * Y / R;
                s.jy = j_phi * X / R;
            }
            out.push_back(s);
        }
    }
    return out;
}

std::vector<FieldSample> sample_field(const SuperpositionSpec& spec,
                                      const PhysicalScales& scales,
                                      const GridSpec& grid, double Z) {
    check_grid(grid);
    // fail fast on configurations without closed-form currents
    if (spec.mode1.p != 0 || spec.mode2.p != 0)
        throw UnsupportedConfiguration(
            "sample_field: superposition currents require p1 = p2 = 0");

    std::vector<FieldSample> out;
    out.reserve(static_cast<size_t>(grid.points_per_side) *
                grid.points_per_side);
    for (int iy = 0; iy < grid.points_per_side; ++iy) {
        const double Y = grid_coord(grid, iy);
        for (int ix = 0; ix < grid.points_per_side; ++ix) {
            const double X = grid_coord(grid, ix);
            const double R = std::hypot(X, Y);
            const double phi = std::atan2(Y, X);
            FieldSample s{X, Y, 0.0, 0.0, 0.0};
            s.rho = superposition_density(spec, scales, R * scales.l_B, phi, Z);
            const SuperpositionCurrents j =
                (R > 0.0)
                    ? superposition_currents(spec, scales, R * scales.l_B,
                                             phi, Z)
                    : superposition_currents_origin_limit(spec, scales, phi, Z);
            const double j_phi = j.j_can_phi + j.j_gauge_phi;
            const double c = std::cos(phi);
            const double sn = std::sin(phi);
            s.jx = j.j_can_r * c - j_phi * sn;
            s.jy = j.j_can_r * sn + j_phi * c;
            out.push_back(s);
        }
    }
    return out;
}

AzimuthalMode azimuthal_mode_phase(std::span<const RingPoint> ring, int order) {
    if (order < 1)
        throw std::invalid_argument("azimuthal_mode_phase: order must be >= 1");
    const int n = static_cast<int>(ring.size());
    if (n < 4 * order)
        throw std::invalid_argument(
            "azimuthal_mode_phase: need at least 4*order samples, got " +
            std::to_string(n));

    // equally spaced on [0, 2 pi)
    const double dphi = 2.0 * std::numbers::pi / n;
    for (int j = 0; j < n; ++j) {
        if (std::abs(ring[j].phi - j * dphi) > 1e-9)
            throw std::invalid_argument(
                "azimuthal_mode_phase: samples must be equally spaced on "
                "[0, 2 pi)");
    }

    // order-q Fourier coefficient, phased so `angle` points at the pattern
    // maxima: for rho = A + B cos(q(phi - theta)) this returns theta
    double re = 0.0, im = 0.0;
    for (const RingPoint& pt : ring) {
        re += pt.rho * std::cos(order * pt.phi);
        im += pt.rho * std::sin(order * pt.phi);
    }
    re /= n;
    im /= n;

    AzimuthalMode out;
    out.amplitude = std::hypot(re, im);
    if (out.amplitude < 1e-12)
        throw DegeneratePattern(
            "azimuthal_mode_phase: order-" + std::to_string(order) +
            " amplitude below 1e-12");
    out.angle = std::atan2(im, re) / order;
    return out;
}

} // namespace landau
