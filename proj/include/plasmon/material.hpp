#pragma once

#include <complex>
#include <string>

// Electron-gas material parameters, film geometry, and the dimensionless
// variables in which the dispersion relation is expressed.

namespace plasmon {

// Free-electron metal described by its plasma frequency and Fermi velocity.
struct MaterialParams {
  double plasma_frequency = 0.0;  // omega_p, rad/s
  double fermi_velocity = 0.0;    // v_F, cm/s
  std::string label;

  // Throws invalid_input unless both parameters are finite and positive.
  void validate() const;
};

// Sodium, the reference material for all tabulated results.
MaterialParams sodium();

// Electromagnetic skin depth delta0 = c / omega_p (cm); the natural length
// scale against which film thickness is measured.
double skin_depth(const MaterialParams& material);

// Thin-film configuration: geometry plus the two scattering parameters.
struct FilmConfig {
  double thickness = 0.0;       // d, cm (full film thickness)
  double specularity = 1.0;     // p in [0,1]: 1 = mirror, 0 = diffuse surfaces
  double collision_ratio = 0.0; // eps = nu / omega_p, bulk collision rate

  double half_thickness() const { return 0.5 * thickness; }

  // Throws invalid_input unless thickness > 0, 0 <= specularity <= 1 and
  // collision_ratio >= 0 (all finite).
  void validate() const;
};

// One evaluation point of the dispersion relation in dimensionless form:
//   omega_ratio     Omega = omega / omega_p
//   collision_ratio eps   = nu / omega_p
//   thickness_ratio w     = (d * omega_p / v_F) * (eps - i Omega),
// the complex argument of the size-effect conductivity factor.
struct DimensionlessPoint {
  double omega_ratio = 0.0;
  double collision_ratio = 0.0;
  std::complex<double> thickness_ratio{0.0, 0.0};
};

// Build a DimensionlessPoint from an absolute frequency omega (rad/s).
// Throws invalid_input if the material/film are invalid or omega <= 0.
DimensionlessPoint make_dimensionless(const MaterialParams& material,
                                      const FilmConfig& film, double omega);

// Same, but with the frequency already expressed as Omega = omega/omega_p.
DimensionlessPoint dimensionless_point(const MaterialParams& material,
                                       const FilmConfig& film,
                                       double omega_ratio);

}  // namespace plasmon
