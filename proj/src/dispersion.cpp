#include "plasmon/dispersion.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "plasmon/conductivity.hpp"
#include "plasmon/constants.hpp"
#include "plasmon/errors.hpp"

namespace plasmon {

namespace {

using cplx = std::complex<double>;

constexpr double resonance_guard = 1e-12;

// Principal square root reflected into the physical half-plane:
// Re k >= 0, ties (Re k = 0) broken toward Im k >= 0.
cplx physical_sqrt(cplx square) {
  cplx root = std::sqrt(square);
  if (root.real() < 0.0 || (root.real() == 0.0 && root.imag() < 0.0)) {
    root = -root;
  }
  return root;
}

// D(Omega) = 1 + i 4 pi sigma_d / omega = 1 - phi / (Omega (Omega + i eps)),
// the denominator of the film impedance.
cplx impedance_bracket(const DimensionlessPoint& point, cplx phi) {
  const cplx omega_term(point.omega_ratio * point.omega_ratio,
                        point.omega_ratio * point.collision_ratio);
  return 1.0 - phi / omega_term;
}

void require_offresonance(cplx denominator, const DimensionlessPoint& point) {
  if (std::abs(denominator) < resonance_guard) {
    std::ostringstream msg;
    msg << "impedance denominator degenerates at Omega = " << point.omega_ratio
        << " (plasma resonance); no finite surface impedance";
    throw resonance_singularity(msg.str());
  }
}

void validate_point(const DimensionlessPoint& point) {
  if (!std::isfinite(point.omega_ratio) || point.omega_ratio <= 0.0) {
    std::ostringstream msg;
    msg << "dispersion point requires Omega > 0, got " << point.omega_ratio;
    throw invalid_input(msg.str());
  }
  if (!std::isfinite(point.collision_ratio) || point.collision_ratio < 0.0) {
    std::ostringstream msg;
    msg << "dispersion point requires eps >= 0, got " << point.collision_ratio;
    throw invalid_input(msg.str());
  }
}

ComplexWaveNumber assemble(cplx k, double omega) {
  ComplexWaveNumber result;
  result.k = k;
  result.alpha = damping_alpha(k, omega);
  result.exists_as_surface_wave = k.imag() < k.real();
  return result;
}

}  // namespace

ImpedanceValue impedance_antisymmetric(const DimensionlessPoint& point,
                                       const FilmConfig& film,
                                       const MaterialParams& material,
                                       double tol) {
  material.validate();
  film.validate();
  validate_point(point);
  const cplx phi = sigma_ratio(point, film.specularity, tol);
  const cplx bracket = impedance_bracket(point, phi);
  require_offresonance(bracket, point);
  const double omega = point.omega_ratio * material.plasma_frequency;
  // Z = -2ic / (omega d D)
  return ImpedanceValue{cplx(0.0, -2.0) * speed_of_light /
                        (omega * film.thickness * bracket)};
}

ComplexWaveNumber k_general(const DimensionlessPoint& point,
                            const FilmConfig& film,
                            const MaterialParams& material, double tol) {
  material.validate();
  film.validate();
  validate_point(point);
  const cplx phi = sigma_ratio(point, film.specularity, tol);
  const cplx bracket = impedance_bracket(point, phi);
  require_offresonance(bracket, point);

  const double omega = point.omega_ratio * material.plasma_frequency;
  const double light = omega / speed_of_light;
  const cplx inv_bracket = 1.0 / bracket;
  const cplx k_square =
      light * light +
      4.0 / (film.thickness * film.thickness) * inv_bracket * inv_bracket;
  return assemble(physical_sqrt(k_square), omega);
}

ComplexWaveNumber k_specular_closed_form(const DimensionlessPoint& point,
                                         const FilmConfig& film,
                                         const MaterialParams& material) {
  material.validate();
  film.validate();
  validate_point(point);
  const double omega_r = point.omega_ratio;
  const double eps = point.collision_ratio;
  const cplx denominator(omega_r * omega_r - 1.0, eps * omega_r);
  require_offresonance(denominator, point);

  const double d0 = film.half_thickness();
  const double scale = speed_of_light / (material.plasma_frequency * d0);
  const cplx ratio = cplx(omega_r, eps) / denominator;
  const cplx radicand = 1.0 + scale * scale * ratio * ratio;

  const double omega = omega_r * material.plasma_frequency;
  const cplx k = material.plasma_frequency * omega_r / speed_of_light *
                 std::sqrt(radicand);
  return assemble(
      (k.real() < 0.0 || (k.real() == 0.0 && k.imag() < 0.0)) ? -k : k, omega);
}

std::complex<double> damping_alpha(std::complex<double> k, double omega) {
  const double light = omega / speed_of_light;
  return physical_sqrt(k * k - cplx(light * light, 0.0));
}

}  // namespace plasmon
