#include "landau/superposition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "landau/errors.hpp"
#include "landau/field_grid.hpp"
#include "landau/quadrature.hpp"
#include "landau/specfun.hpp"

namespace landau {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kContrastFloor = 1e-12;

struct PairTerms {
    double f1, f2;       // per-mode radial factors at xi
    double norm;         // 1 / (a^2 + b^2)
    double psi;          // interference phase (m1-m2) phi - 2(n1-n2) Z
};

PairTerms pair_terms(const SuperpositionSpec& s, double xi, double phi,
                     double Z) {
    PairTerms t;
    t.f1 = beam_radial_factor(s.mode1.p, std::abs(s.mode1.m), xi);
    t.f2 = beam_radial_factor(s.mode2.p, std::abs(s.mode2.m), xi);
    t.norm = 1.0 / (s.a * s.a + s.b * s.b);
    t.psi = (s.mode1.m - s.mode2.m) * phi -
            2.0 * (s.mode1.n() - s.mode2.n()) * Z;
    return t;
}

} // namespace

SuperpositionSpec::SuperpositionSpec(ModeIndex m1, ModeIndex m2, double a_,
                                     double b_)
    : mode1(m1), mode2(m2), a(a_), b(b_) {
    if (mode1 == mode2)
        throw std::invalid_argument(
            "SuperpositionSpec: the two modes must differ in p or m");
    if (!(a * a + b * b > 0.0))
        throw std::invalid_argument(
            "SuperpositionSpec: mixing amplitudes must not both vanish");
}

SuperpositionSpec SuperpositionSpec::with_default_mixing(ModeIndex m1,
                                                         ModeIndex m2) {
    const Mixing mix = default_mixing(m1.m, m2.m);
    return SuperpositionSpec(m1, m2, mix.a, mix.b);
}

Mixing default_mixing(int m1, int m2) {
    const double ln2 = std::numbers::ln2;
    Mixing mix;
    mix.a = std::exp(0.5 * log_factorial(std::abs(m1)) -
                     0.5 * std::abs(m1) * ln2);
    mix.b = 2.0 * std::exp(0.5 * log_factorial(std::abs(m2)) -
                           0.5 * std::abs(m2) * ln2);
    return mix;
}

double superposition_density(const SuperpositionSpec& spec,
                             const PhysicalScales& scales,
                             double r, double phi, double Z) {
    if (r < 0.0)
        throw std::domain_error("superposition_density: negative radius");
    const double R = r / scales.l_B;
    const double xi = 0.5 * R * R;
    const PairTerms t = pair_terms(spec, xi, phi, Z);
    const double diag = spec.a * spec.a * t.f1 * t.f1 +
                        spec.b * spec.b * t.f2 * t.f2;
    const double cross = 2.0 * spec.a * spec.b * t.f1 * t.f2 * std::cos(t.psi);
    return t.norm * (diag + cross) / kTwoPi;
}

namespace {

void require_nodeless(const SuperpositionSpec& spec, const char* who) {
    if (spec.mode1.p != 0 || spec.mode2.p != 0)
        throw UnsupportedConfiguration(
            std::string(who) +
            ": closed-form currents exist only for p1 = p2 = 0 (got p1=" +
            std::to_string(spec.mode1.p) + ", p2=" +
            std::to_string(spec.mode2.p) + ")");
}

} // namespace

SuperpositionCurrents superposition_currents(const SuperpositionSpec& spec,
                                             const PhysicalScales& scales,
                                             double r, double phi, double Z) {
    require_nodeless(spec, "superposition_currents");
    if (!(r > 0.0))
        throw std::domain_error("superposition_currents: r must be > 0");

    const double R = r / scales.l_B;
    const double xi = 0.5 * R * R;
    const PairTerms t = pair_terms(spec, xi, phi, Z);
    const int m1 = spec.mode1.m;
    const int m2 = spec.mode2.m;
    const double ab = spec.a * spec.b;
    const double F1 = spec.a * spec.a * t.f1 * t.f1;
    const double F2 = spec.b * spec.b * t.f2 * t.f2;
    const double cross = t.f1 * t.f2;
    const double cos_psi = std::cos(t.psi);
    const double sin_psi = std::sin(t.psi);
    const double c = t.norm / kTwoPi;

    SuperpositionCurrents out;
    out.j_can_r = c * ab * (std::abs(m1) - std::abs(m2)) * cross / std::sqrt(xi) *
                  sin_psi / std::numbers::sqrt2;
    out.j_can_phi = c / R * (m1 * F1 + m2 * F2 +
                             (m1 + m2) * ab * cross * cos_psi);
    out.j_gauge_phi = c * 0.5 * R * (F1 + F2 + 2.0 * ab * cross * cos_psi);
    return out;
}

SuperpositionCurrents superposition_currents_origin_limit(
    const SuperpositionSpec& spec, const PhysicalScales& /*scales*/,
    double phi, double Z) {
    require_nodeless(spec, "superposition_currents_origin_limit");

    const int am1 = std::abs(spec.mode1.m);
    const int am2 = std::abs(spec.mode2.m);
    SuperpositionCurrents out{0.0, 0.0, 0.0};
    if (am1 + am2 != 1)
        return out; // every term vanishes at least linearly in R

    // Exactly one of the modes is an m = 0 mode mixed with an |m| = 1 mode;
    // the cross term survives with xi^{(|m1|+|m2|-1)/2} -> 1 and
    // (1/R) xi^{1/2} -> 1/sqrt(2). With p1 = p2 = 0 both normalization
    // factors are sqrt(1/|m_i|!) = 1 here.
    const double psi = (spec.mode1.m - spec.mode2.m) * phi -
                       2.0 * (spec.mode1.n() - spec.mode2.n()) * Z;
    const double c = 1.0 / ((spec.a * spec.a + spec.b * spec.b) * kTwoPi);
    const double ab = spec.a * spec.b;
    out.j_can_r = c * ab * (am1 - am2) * std::sin(psi) / std::numbers::sqrt2;
    out.j_can_phi = c * (spec.mode1.m + spec.mode2.m) * ab * std::cos(psi) /
                    std::numbers::sqrt2;
    out.j_gauge_phi = 0.0;
    return out;
}

double analytic_rotation_rate(const SuperpositionSpec& spec) {
    if (spec.mode1.m == spec.mode2.m)
        throw std::domain_error(
            "analytic_rotation_rate: m1 = m2 gives no azimuthal interference; "
            "the pattern does not rotate");
    return 2.0 * (spec.mode1.n() - spec.mode2.n()) /
           static_cast<double>(spec.mode1.m - spec.mode2.m);
}

CentroidSample centroid(const SuperpositionSpec& spec,
                        const PhysicalScales& scales, double Z) {
    const RadialQuadrature quad =
        RadialQuadrature::for_pair(spec.mode1, spec.mode2);
    const int q = std::abs(spec.mode1.m - spec.mode2.m);
    const int n_phi = std::max(32, 4 * (q + 2));

    auto x_weighted = [&](double R, double phi) {
        return R * std::cos(phi) *
               superposition_density(spec, scales, R * scales.l_B, phi, Z);
    };
    auto y_weighted = [&](double R, double phi) {
        return R * std::sin(phi) *
               superposition_density(spec, scales, R * scales.l_B, phi, Z);
    };

    CentroidSample out;
    out.Z = Z;
    out.X_bar = disk_integrate(x_weighted, quad, n_phi);
    out.Y_bar = disk_integrate(y_weighted, quad, n_phi);
    return out;
}

namespace {

// |c_q| on the ring of radius R (units l_B) at propagation distance Z.
double ring_contrast(const SuperpositionSpec& spec, const PhysicalScales& scales,
                     double R, double Z, int q, int n_phi) {
    std::vector<RingPoint> ring(n_phi);
    for (int j = 0; j < n_phi; ++j) {
        const double phi = kTwoPi * j / n_phi;
        ring[j] = {phi, superposition_density(spec, scales, R * scales.l_B,
                                              phi, Z)};
    }
    double re = 0.0, im = 0.0;
    for (const RingPoint& pt : ring) {
        re += pt.rho * std::cos(q * pt.phi);
        im += pt.rho * std::sin(q * pt.phi);
    }
    return std::hypot(re, im) / n_phi;
}

// Coarse 16-point scan followed by golden-section refinement of the
// contrast-maximizing ring radius.
double best_ring_radius(const SuperpositionSpec& spec,
                        const PhysicalScales& scales, double r_max, double Z,
                        int q, int n_phi) {
    const int coarse = 16;
    double best_c = -1.0;
    int best_i = 0;
    for (int i = 1; i <= coarse; ++i) {
        const double R = r_max * i / coarse;
        const double c = ring_contrast(spec, scales, R, Z, q, n_phi);
        if (c > best_c) {
            best_c = c;
            best_i = i;
        }
    }
    if (best_c < kContrastFloor)
        throw DegeneratePattern(
            "measured_rotation_rate: interference contrast below 1e-12 at "
            "every candidate ring");

    double lo = r_max * std::max(best_i - 1, 0) / coarse;
    double hi = r_max * std::min(best_i + 1, coarse) / coarse;
    if (lo == 0.0)
        lo = 1e-6 * r_max;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double c1 = ring_contrast(spec, scales, x1, Z, q, n_phi);
    double c2 = ring_contrast(spec, scales, x2, Z, q, n_phi);
    for (int it = 0; it < 48 && hi - lo > 1e-10 * r_max; ++it) {
        if (c1 < c2) {
            lo = x1;
            x1 = x2;
            c1 = c2;
            x2 = lo + gr * (hi - lo);
            c2 = ring_contrast(spec, scales, x2, Z, q, n_phi);
        } else {
            hi = x2;
            x2 = x1;
            c2 = c1;
            x1 = hi - gr * (hi - lo);
            c1 = ring_contrast(spec, scales, x1, Z, q, n_phi);
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

double measured_rotation_rate(const SuperpositionSpec& spec,
                              const PhysicalScales& scales,
                              std::span<const double> Z_samples) {
    if (spec.mode1.m == spec.mode2.m)
        throw std::domain_error(
            "measured_rotation_rate: m1 = m2 patterns do not rotate");
    std::vector<double> zs(Z_samples.begin(), Z_samples.end());
    std::sort(zs.begin(), zs.end());
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
    if (zs.size() < 3)
        throw std::invalid_argument(
            "measured_rotation_rate: need at least 3 distinct Z samples, got " +
            std::to_string(zs.size()));

    const int q = std::abs(spec.mode1.m - spec.mode2.m);
    const int n_phi = std::max(64, 8 * q);
    const double r_max =
        RadialQuadrature::for_pair(spec.mode1, spec.mode2).r_max;
    const double ring_R =
        best_ring_radius(spec, scales, r_max, zs.front(), q, n_phi);

    // raw order-q Fourier phase at each Z, unwrapped with a 2 pi branch
    std::vector<double> raw(zs.size());
    for (size_t j = 0; j < zs.size(); ++j) {
        std::vector<RingPoint> ring(n_phi);
        for (int i = 0; i < n_phi; ++i) {
            const double phi = kTwoPi * i / n_phi;
            ring[i] = {phi, superposition_density(spec, scales,
                                                  ring_R * scales.l_B, phi,
                                                  zs[j])};
        }
        const AzimuthalMode am = azimuthal_mode_phase(ring, q);
        raw[j] = q * am.angle;
        if (j > 0)
            raw[j] += kTwoPi * std::round((raw[j - 1] - raw[j]) / kTwoPi);
    }

    // least-squares slope of the pattern angle raw/q against Z
    const double n = static_cast<double>(zs.size());
    double zm = 0.0, am = 0.0;
    for (size_t j = 0; j < zs.size(); ++j) {
        zm += zs[j];
        am += raw[j] / q;
    }
    zm /= n;
    am /= n;
    double num = 0.0, den = 0.0;
    for (size_t j = 0; j < zs.size(); ++j) {
        num += (zs[j] - zm) * (raw[j] / q - am);
        den += (zs[j] - zm) * (zs[j] - zm);
    }
    return num / den;
}

double safe_z_spacing(const SuperpositionSpec& spec) {
    const double guess = std::abs(analytic_rotation_rate(spec));
    const int q = std::abs(spec.mode1.m - spec.mode2.m);
    return std::numbers::pi / (2.0 * q * std::max(guess, 0.25));
}

std::vector<double> tracking_z_samples(const SuperpositionSpec& spec, int n) {
    if (n < 3)
        throw std::invalid_argument("tracking_z_samples: need n >= 3");
    const double dz = safe_z_spacing(spec);
    std::vector<double> zs(n);
    for (int i = 0; i < n; ++i)
        zs[i] = i * dz;
    return zs;
}

} // namespace landau
