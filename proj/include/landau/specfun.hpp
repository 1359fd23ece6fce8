#ifndef LANDAU_SPECFUN_HPP
#define LANDAU_SPECFUN_HPP

namespace landau {

// Declared support envelope for the Laguerre evaluator. Values are finite and
// accurate for degree <= kLaguerreMaxDegree, order <= kLaguerreMaxOrder and
// arguments in [0, kLaguerreXMax].
inline constexpr int kLaguerreMaxDegree = 64;
inline constexpr int kLaguerreMaxOrder  = 64;
inline constexpr double kLaguerreXMax   = 400.0;

struct LaguerreEval {
    double value;      // L_p^alpha(x)
    double derivative; // d/dx L_p^alpha(x) = -L_{p-1}^{alpha+1}(x)
};

// ln(k!). Exact-factorial route for k <= 20, lgamma beyond.
double log_factorial(int k);

// Associated Laguerre polynomial by the upward three-term recurrence in the
// degree, which is stable on the declared envelope. Integer order only.
double laguerre_value(int p, int alpha, double x);

LaguerreEval laguerre(int p, int alpha, double x);

} // namespace landau

#endif
