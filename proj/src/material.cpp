#include "plasmon/material.hpp"

#include <cmath>
#include <sstream>

#include "plasmon/constants.hpp"
#include "plasmon/errors.hpp"

namespace plasmon {

namespace {

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

void MaterialParams::validate() const {
  if (!finite_positive(plasma_frequency)) {
    std::ostringstream msg;
    msg << "material plasma_frequency must be finite and positive, got "
        << plasma_frequency;
    throw invalid_input(msg.str());
  }
  if (!finite_positive(fermi_velocity)) {
    std::ostringstream msg;
    msg << "material fermi_velocity must be finite and positive, got "
        << fermi_velocity;
    throw invalid_input(msg.str());
  }
  if (fermi_velocity >= speed_of_light) {
    throw invalid_input("material fermi_velocity must be below c");
  }
}

MaterialParams sodium() {
  return MaterialParams{6.5e15, 8.52e7, "sodium"};
}

double skin_depth(const MaterialParams& material) {
  material.validate();
  return speed_of_light / material.plasma_frequency;
}

void FilmConfig::validate() const {
  if (!finite_positive(thickness)) {
    std::ostringstream msg;
    msg << "film thickness must be finite and positive, got " << thickness;
    throw invalid_input(msg.str());
  }
  if (!std::isfinite(specularity) || specularity < 0.0 || specularity > 1.0) {
    std::ostringstream msg;
    msg << "film specularity must lie in [0, 1], got " << specularity;
    throw invalid_input(msg.str());
  }
  if (!std::isfinite(collision_ratio) || collision_ratio < 0.0) {
    std::ostringstream msg;
    msg << "film collision_ratio must be finite and >= 0, got "
        << collision_ratio;
    throw invalid_input(msg.str());
  }
}

DimensionlessPoint dimensionless_point(const MaterialParams& material,
                                       const FilmConfig& film,
                                       double omega_ratio) {
  material.validate();
  film.validate();
  if (!std::isfinite(omega_ratio) || omega_ratio <= 0.0) {
    std::ostringstream msg;
    msg << "frequency ratio must be finite and positive, got " << omega_ratio;
    throw invalid_input(msg.str());
  }
  // w = (d omega_p / v_F)(eps - i Omega): thickness measured in mean free
  // paths of an electron during one field period.
  const double scale =
      film.thickness * material.plasma_frequency / material.fermi_velocity;
  return DimensionlessPoint{
      omega_ratio, film.collision_ratio,
      scale * std::complex<double>(film.collision_ratio, -omega_ratio)};
}

DimensionlessPoint make_dimensionless(const MaterialParams& material,
                                      const FilmConfig& film, double omega) {
  material.validate();
  if (!std::isfinite(omega) || omega <= 0.0) {
    std::ostringstream msg;
    msg << "frequency must be finite and positive, got " << omega;
    throw invalid_input(msg.str());
  }
  return dimensionless_point(material, film, omega / material.plasma_frequency);
}

}  // namespace plasmon
