#pragma once

#include <complex>

#include "plasmon/material.hpp"

// Dispersion relation of surface plasma oscillations in a thin film, for
// the configuration with antisymmetric tangential magnetic field across the
// film. All formulas assume d much smaller than both the skin depth and the
// free-space wavelength, which makes the film enter only through its
// surface impedance.

namespace plasmon {

// Surface impedance of the film (dimensionless, CGS convention
// E_t = Z [H_t x n]).
struct ImpedanceValue {
  std::complex<double> value{0.0, 0.0};
};

// Wave number of the surface oscillation at one frequency:
//   k       complex propagation constant along the film (1/cm)
//   alpha   transverse decay constant in the vacuum half-spaces (1/cm)
//   exists_as_surface_wave  true when the mode is oscillatory rather than
//           overdamped, i.e. Im k < Re k.
struct ComplexWaveNumber {
  std::complex<double> k{0.0, 0.0};
  std::complex<double> alpha{0.0, 0.0};
  bool exists_as_surface_wave = false;
};

// Z = -2ic / (omega d D), where D = 1 + i 4 pi sigma_d / omega
//   = 1 - phi(w) / (Omega (Omega + i eps)).
// Throws resonance_singularity when |D| < 1e-12 (plasma resonance of a
// loss-free film).
ImpedanceValue impedance_antisymmetric(const DimensionlessPoint& point,
                                       const FilmConfig& film,
                                       const MaterialParams& material,
                                       double tol = 1e-10);

// k(omega) from the thin-film dispersion relation
//   k^2 = (omega/c)^2 + (4 / d^2) / D^2,
// using the size-dependent conductivity at the film's specularity.
// Branch: principal square root, negated if Re k < 0, the Re k = 0 tie
// broken toward Im k >= 0.
ComplexWaveNumber k_general(const DimensionlessPoint& point,
                            const FilmConfig& film,
                            const MaterialParams& material,
                            double tol = 1e-10);

// Closed form for perfectly specular surfaces (p = 1), where phi = 1 and no
// series evaluation is needed:
//   k = (omega_p Omega / c) sqrt(1 + (c / (omega_p d0))^2 (Omega + i eps)^2
//                                    / (Omega^2 - 1 + i eps Omega)^2)
// with d0 = d/2 the half-thickness. Same branch rules as k_general.
// Throws resonance_singularity when |Omega^2 - 1 + i eps Omega| < 1e-12.
ComplexWaveNumber k_specular_closed_form(const DimensionlessPoint& point,
                                         const FilmConfig& film,
                                         const MaterialParams& material);

// Transverse decay constant alpha = sqrt(k^2 - (omega/c)^2), branch with
// Re alpha >= 0 (Im alpha >= 0 on the Re alpha = 0 boundary) so the fields
// decay away from the film whenever a decaying solution exists.
std::complex<double> damping_alpha(std::complex<double> k, double omega);

}  // namespace plasmon
