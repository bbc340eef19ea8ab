#pragma once

// Physical constants and unit helpers. All quantities in the library use
// Gaussian (CGS) units: lengths in cm, frequencies in rad/s, velocities in
// cm/s, wave numbers in 1/cm.

namespace plasmon {

inline constexpr double speed_of_light = 2.99792458e10;  // cm/s

// Film thicknesses are specified in nanometres at the API surface and
// converted to cm internally.
inline constexpr double nm_to_cm(double nm) { return nm * 1e-7; }
inline constexpr double cm_to_nm(double cm) { return cm * 1e7; }

}  // namespace plasmon
