#pragma once

// CODATA 2018 exact / recommended values, SI units.
namespace casimir::si {

inline constexpr double c = 299792458.0;           // m/s
inline constexpr double hbar = 1.054571817e-34;    // J s
inline constexpr double k_B = 1.380649e-23;        // J/K

}  // namespace casimir::si
