#ifndef CRYOLINK_CONSTANTS_HPP
#define CRYOLINK_CONSTANTS_HPP

#include <numbers>

namespace cryolink::constants {

// CODATA 2018 values, SI units. Fixed by definition, never user-configurable.
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double boltzmann = 1.380649e-23;             // J/K
inline constexpr double hbar = 1.054571817e-34;               // J*s
inline constexpr double speed_of_light = 299792458.0;         // m/s

inline constexpr double pi = std::numbers::pi_v<double>;

// 10*log10(2): a "3 dB" loss that is an exact factor of two in linear power.
// Heat-load chains in this model are specified as power-halving steps, so the
// defaults use the exact value rather than 3.0.
inline constexpr double three_db_exact = 3.0102999566398120;

}  // namespace cryolink::constants

#endif
