#include "landau/lg_beam.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "landau/specfun.hpp"

namespace landau {

LGParams::LGParams(double w0_, double k_) : w0(w0_), k(k_) {
    if (!(w0 > 0.0) || !(k > 0.0))
        throw std::invalid_argument("LGParams: w0 and k must be positive");
    z_R = 0.5 * k * w0 * w0;
}

double beam_width(const LGParams& params, double z) {
    const double zr = z / params.z_R;
    return params.w0 * std::sqrt(1.0 + zr * zr);
}

double inverse_curvature(const LGParams& params, double z) {
    return z / (z * z + params.z_R * params.z_R);
}

double gouy_phase(const ModeIndex& mode, const LGParams& params, double z) {
    const double order = 2.0 * mode.p + std::abs(mode.m) + 1.0;
    return -order * std::atan(z / params.z_R);
}

double gouy_total_jump(const ModeIndex& mode) {
    return -(2.0 * mode.p + std::abs(mode.m) + 1.0) * std::numbers::pi;
}

std::complex<double> lg_amplitude(const ModeIndex& mode, const LGParams& params,
                                  double r, double phi, double z) {
    if (r < 0.0)
        throw std::domain_error("lg_amplitude: negative radius");
    const int am = std::abs(mode.m);
    const double w = beam_width(params, z);
    const double u = 2.0 * r * r / (w * w);

    // norm fixed so the transverse integral of |psi|^2 is one at every z;
    // at the waist with w0 = w_m this reproduces the Landau density
    const double log_norm =
        0.5 * (std::numbers::ln2 - std::log(std::numbers::pi) +
               log_factorial(mode.p) - log_factorial(mode.p + am));
    double envelope = std::exp(log_norm) / w;
    if (u > 0.0)
        envelope *= std::exp(0.5 * am * std::log(u) - 0.5 * u);
    else if (am > 0)
        envelope = 0.0;
    envelope *= laguerre_value(mode.p, am, u);

    const double phase = mode.m * phi + params.k * z +
                         0.5 * params.k * r * r * inverse_curvature(params, z) +
                         gouy_phase(mode, params, z);
    return envelope * std::exp(std::complex<double>(0.0, phase));
}

} // namespace landau
