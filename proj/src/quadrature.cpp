#include "landau/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "landau/errors.hpp"

namespace landau {

namespace {

// 16-point Gauss-Legendre rule on [-1, 1], positive half; exact through
// polynomial degree 31 per panel.
constexpr int kHalf = 8;
constexpr double kNodes[kHalf] = {
    0.0950125098376374401853, 0.2816035507792589132305,
    0.4580167776572273863424, 0.6178762444026437484467,
    0.7554044083550030338951, 0.8656312023878317438805,
    0.9445750230732325760780, 0.9894009349916499325962,
};
constexpr double kWeights[kHalf] = {
    0.1894506104550684962854, 0.1826034150449235888667,
    0.1691565193950025381893, 0.1495959888165767320815,
    0.1246289712555338720524, 0.0951585116824927848099,
    0.0622535239386478928628, 0.0271524594117540948518,
};

double integrate_fixed(const std::function<double(double)>& f, double r_max,
                       int panels) {
    const double h = r_max / panels;
    double sum = 0.0;
    for (int panel = 0; panel < panels; ++panel) {
        const double mid = (panel + 0.5) * h;
        const double half = 0.5 * h;
        double local = 0.0;
        for (int i = 0; i < kHalf; ++i) {
            local += kWeights[i] * (f(mid - half * kNodes[i]) +
                                    f(mid + half * kNodes[i]));
        }
        sum += half * local;
    }
    return sum;
}

} // namespace

RadialQuadrature::RadialQuadrature(double r_max_, double tol_)
    : r_max(r_max_), tol(tol_) {
    if (!(r_max > 0.0))
        throw std::invalid_argument("RadialQuadrature: r_max must be positive");
    if (!(tol > 0.0))
        throw std::invalid_argument("RadialQuadrature: tol must be positive");
}

RadialQuadrature RadialQuadrature::for_mode(const ModeIndex& mode) {
    const double turning = 2.0 * std::sqrt(2.0 * mode.n() + std::abs(mode.m) + 1.0);
    return RadialQuadrature(turning + 10.0);
}

RadialQuadrature RadialQuadrature::for_pair(const ModeIndex& a,
                                            const ModeIndex& b) {
    const RadialQuadrature qa = for_mode(a);
    const RadialQuadrature qb = for_mode(b);
    return RadialQuadrature(std::max(qa.r_max, qb.r_max));
}

double radial_integrate(const std::function<double(double)>& f,
                        const RadialQuadrature& quad) {
    if (quad.nodes_per_panel != 16)
        throw std::invalid_argument(
            "radial_integrate: only the 16-node rule is implemented");

    int panels = quad.initial_panels;
    double prev = integrate_fixed(f, quad.r_max, panels);
    for (int step = 0; step < quad.max_doublings; ++step) {
        panels *= 2;
        const double cur = integrate_fixed(f, quad.r_max, panels);
        if (std::abs(cur - prev) < quad.tol)
            return cur;
        prev = cur;
    }
    throw QuadratureError("radial_integrate: no convergence after " +
                          std::to_string(quad.max_doublings) +
                          " panel doublings (r_max=" +
                          std::to_string(quad.r_max) + ")");
}

double disk_integrate(const std::function<double(double, double)>& f,
                      const RadialQuadrature& quad, int n_phi) {
    if (n_phi < 4)
        throw std::invalid_argument("disk_integrate: n_phi too small");
    const double dphi = 2.0 * std::numbers::pi / n_phi;
    auto ring_mean = [&](double R) {
        double s = 0.0;
        for (int j = 0; j < n_phi; ++j)
            s += f(R, j * dphi);
        return s * dphi * R;
    };
    return radial_integrate(ring_mean, quad);
}

} // namespace landau
