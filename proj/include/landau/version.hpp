#ifndef LANDAU_VERSION_HPP
#define LANDAU_VERSION_HPP

namespace landau {

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace landau

#endif
