#include "plasmon/detail/expint.hpp"

#include <cmath>
#include <limits>

#include "plasmon/errors.hpp"

namespace plasmon::detail {

namespace {

using cplx = std::complex<double>;

constexpr double euler_gamma = 0.5772156649015328606;

bool finite(cplx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Power series around z = 0, usable for |z| <= 1:
//   E_n(z) = (-z)^{n-1}/(n-1)! * (psi(n) - log z)
//            - sum_{k >= 0, k != n-1} (-z)^k / (k! (k - n + 1))
// with psi(1) = -gamma, psi(n) = -gamma + sum_{m<n} 1/m.
cplx en_series(int n, cplx z) {
  double psi = -euler_gamma;
  for (int m = 1; m < n; ++m) psi += 1.0 / m;

  double factorial = 1.0;  // (n-1)!
  for (int m = 2; m < n; ++m) factorial *= m;

  cplx lead = 1.0;  // (-z)^{n-1}
  for (int m = 0; m < n - 1; ++m) lead *= -z;

  cplx sum = lead / factorial * (psi - std::log(z));
  cplx power = 1.0;  // (-z)^k / k!
  for (int k = 0; k <= 160; ++k) {
    if (k > 0) power *= -z / static_cast<double>(k);
    if (k == n - 1) continue;
    const cplx contrib = power / static_cast<double>(k - n + 1);
    sum -= contrib;
    if (k > n && std::abs(contrib) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Modified-Lentz continued fraction, converges for |z| > 1 on Re z >= 0:
//   E_n(z) = e^{-z} / (z + n - 1*n/(z + n + 2 - 2(n+1)/(z + n + 4 - ...)))
cplx en_contfrac(int n, cplx z) {
  constexpr double tiny = 1e-300;
  cplx b = z + static_cast<double>(n);
  cplx c = 1.0 / tiny;
  cplx d = 1.0 / b;
  cplx h = d;
  double deviation = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 500; ++i) {
    const double a = -static_cast<double>(i) * (n - 1 + i);
    b += 2.0;
    d = a * d + b;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    c = b + a / c;
    if (std::abs(c) < tiny) c = tiny;
    const cplx delta = c * d;
    h *= delta;
    deviation = std::abs(delta - 1.0);
    if (deviation < 1e-16) return h * std::exp(-z);
  }
  throw accuracy_error(
      "exponential-integral continued fraction did not converge",
      h * std::exp(-z), deviation);
}

// Asymptotic expansion of the difference E_3(a) - E_5(a), which avoids the
// cancellation of the direct difference (J ~ 2 e^{-a}/a^2 while each E_n is
// ~ e^{-a}/a). From E_n(z) ~ (e^{-z}/z) sum_k (-1)^k (n)_k z^{-k}:
//   J(a) = (e^{-a}/a) sum_{k>=1} (-1)^k [(3)_k - (5)_k] a^{-k}
//        = (e^{-a}/a) (2/a - 18/a^2 + 150/a^3 - ...).
// Truncated at the smallest term; for |a| >= 50 that term is below 1e-13
// relative.
cplx j_asymptotic(cplx a) {
  const cplx inv = 1.0 / a;
  cplx sum = 0.0;
  double poch3 = 1.0;  // rising factorial (3)_k
  double poch5 = 1.0;  // rising factorial (5)_k
  cplx sign_pow = 1.0; // (-1/a)^k
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= 60; ++k) {
    poch3 *= 2 + k;
    poch5 *= 4 + k;
    sign_pow *= -inv;
    const cplx term = (poch3 - poch5) * sign_pow;
    const double magnitude = std::abs(term);
    if (magnitude > previous) break;  // past the smallest term: stop
    sum += term;
    if (magnitude < 1e-18 * std::abs(sum)) break;
    previous = magnitude;
  }
  return std::exp(-a) * inv * sum;
}

}  // namespace

std::complex<double> expint_en(int n, std::complex<double> z) {
  if (n < 1) throw invalid_input("expint_en requires order n >= 1");
  if (!finite(z)) throw invalid_input("expint_en requires finite argument");
  if (z.real() < 0.0) {
    throw invalid_input("expint_en requires Re z >= 0");
  }
  if (z == cplx(0.0, 0.0)) {
    if (n < 2) throw invalid_input("expint_en diverges at z = 0 for n < 2");
    return cplx(1.0 / (n - 1), 0.0);
  }
  return std::abs(z) <= 1.0 ? en_series(n, z) : en_contfrac(n, z);
}

std::complex<double> exp_integral_j(std::complex<double> a) {
  if (!finite(a) || a.real() < 0.0) {
    throw invalid_input("exp_integral_j requires finite a with Re a >= 0");
  }
  if (a == cplx(0.0, 0.0)) return cplx(0.25, 0.0);
  const double magnitude = std::abs(a);
  if (magnitude >= 50.0) return j_asymptotic(a);
  if (magnitude <= 1.0) return en_series(3, a) - en_series(5, a);
  return en_contfrac(3, a) - en_contfrac(5, a);
}

}  // namespace plasmon::detail
