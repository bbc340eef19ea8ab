#pragma once

#include <complex>

#include "plasmon/material.hpp"

// Size-dependent surface conductivity of a thin film with partially
// specular boundary scattering.

namespace plasmon {

// Result of evaluating the size-effect factor phi(w):
//   phi                  the factor itself (dimensionless, -> 1 for thick films)
//   w_used               the argument it was evaluated at
//   quad_error_estimate  certified relative error of `phi`
//   terms_used           series terms consumed (diagnostic)
struct ConductivityFactor {
  std::complex<double> phi{1.0, 0.0};
  std::complex<double> w_used{0.0, 0.0};
  double quad_error_estimate = 0.0;
  int terms_used = 0;
};

// phi(w, p) = 1 - (3/(2w))(1-p) * I(w, p),
//   I = int_1^inf (1/t^3 - 1/t^5) (1 - e^{-wt}) / (1 - p e^{-wt}) dt,
// the factor by which boundary scattering reduces the Drude conductivity of
// a film of dimensionless thickness w (see DimensionlessPoint). Evaluated
// by expanding the integrand in powers of p e^{-wt}, which turns I into a
// series of exponential-integral differences with a rigorously bounded
// tail; the certified relative error is <= tol.
//
// Preconditions: 0 <= p <= 1, tol > 0. For p < 1 the integral only
// converges for Re w > 0 (a collisionless film, Re w = 0, is rejected with
// nonconvergent_integral). p = 1 returns phi = 1 exactly, zero error, for
// any w.
// Throws accuracy_error (carrying the best estimate) if the series cannot
// certify `tol` within the term budget.
ConductivityFactor phi_factor(std::complex<double> w, double p,
                              double tol = 1e-10);

// Ratio of the film's surface conductivity to the bulk Drude value at the
// same complex frequency: exactly phi evaluated at the point's thickness
// ratio. Convenience wrapper used by the dispersion code.
std::complex<double> sigma_ratio(const DimensionlessPoint& point,
                                 double specularity, double tol = 1e-10);

}  // namespace plasmon
