#pragma once

#include <complex>

// Generalized exponential integrals E_n(z) on the right half-plane, and the
// combination J(a) = E_3(a) - E_5(a) that the size-effect conductivity
// series is built from. Internal numerical kernels; not part of the public
// API surface.

namespace plasmon::detail {

// E_n(z) = int_1^inf exp(-z t) / t^n dt for n >= 1, Re z >= 0, z != 0.
// Power series for |z| <= 1, modified-Lentz continued fraction otherwise.
// Accuracy: ~1e-15 relative away from the negative real axis.
std::complex<double> expint_en(int n, std::complex<double> z);

// J(a) = E_3(a) - E_5(a) = int_1^inf (1/t^3 - 1/t^5) exp(-a t) dt,
// with the removable value J(0) = 1/4. Requires Re a >= 0.
// For large |a| the direct difference E_3 - E_5 cancels (J ~ 2 e^-a / a^2
// while E_n ~ e^-a / a), so |a| >= 50 switches to an asymptotic expansion
// of the difference itself.
std::complex<double> exp_integral_j(std::complex<double> a);

}  // namespace plasmon::detail
