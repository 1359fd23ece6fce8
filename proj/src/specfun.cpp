#include "landau/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace landau {

namespace {

// k! is exactly representable as uint64 up to k = 20.
double exact_factorial(int k) {
    unsigned long long f = 1;
    for (int i = 2; i <= k; ++i)
        f *= static_cast<unsigned long long>(i);
    return static_cast<double>(f);
}

} // namespace

double log_factorial(int k) {
    if (k < 0)
        throw std::domain_error("log_factorial: negative argument k=" +
                                std::to_string(k));
    if (k <= 1)
        return 0.0;
    if (k <= 20)
        return std::log(exact_factorial(k));
    return std::lgamma(static_cast<double>(k) + 1.0);
}

double laguerre_value(int p, int alpha, double x) {
    if (p < 0 || alpha < 0 || p > kLaguerreMaxDegree || alpha > kLaguerreMaxOrder)
        throw std::domain_error("laguerre: indices outside envelope, p=" +
                                std::to_string(p) + " alpha=" +
                                std::to_string(alpha));
    if (x < 0.0)
        throw std::domain_error("laguerre: negative argument x=" +
                                std::to_string(x));

    if (p == 0)
        return 1.0;

    // upward recurrence in the degree:
    //   k L_k = (2k-1+alpha-x) L_{k-1} - (k-1+alpha) L_{k-2}
    double lm2 = 1.0;
    double lm1 = 1.0 + alpha - x;
    for (int k = 2; k <= p; ++k) {
        const double lk = ((2.0 * k - 1.0 + alpha - x) * lm1 -
                           (k - 1.0 + alpha) * lm2) / k;
        lm2 = lm1;
        lm1 = lk;
    }
    return lm1;
}

LaguerreEval laguerre(int p, int alpha, double x) {
    LaguerreEval out;
    out.value = laguerre_value(p, alpha, x);
    out.derivative = (p == 0) ? 0.0 : -laguerre_value(p - 1, alpha + 1, x);
    return out;
}

} // namespace landau
