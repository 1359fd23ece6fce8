#ifndef LANDAU_ERRORS_HPP
#define LANDAU_ERRORS_HPP

#include <stdexcept>

namespace landau {

// Panel doubling did not converge within the refinement budget.
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested a closed form outside its validity range (e.g. superposition
// currents with radial nodes).
struct UnsupportedConfiguration : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Interference contrast too low to track a pattern angle.
struct DegeneratePattern : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace landau

#endif
