#include <doctest.h>

#include <cmath>

#include "plasmon/constants.hpp"
#include "plasmon/errors.hpp"
#include "plasmon/material.hpp"

using namespace plasmon;

TEST_CASE("sodium preset carries the reference constants") {
  const auto mat = sodium();
  CHECK(mat.plasma_frequency == 6.5e15);
  CHECK(mat.fermi_velocity == 8.52e7);
  CHECK(mat.label == "sodium");
  CHECK_NOTHROW(mat.validate());
}

TEST_CASE("skin depth is c / omega_p") {
  CHECK(skin_depth(sodium()) ==
        doctest::Approx(4.6121916615384615e-6).epsilon(1e-14));

  // Sodium's value sits in the expected decade.
  CHECK(skin_depth(sodium()) > 1e-6);
  CHECK(skin_depth(sodium()) < 1e-5);

  // Identity case: omega_p numerically equal to c gives depth 1 cm.
  MaterialParams unit{speed_of_light, 1e8, "unit"};
  CHECK(skin_depth(unit) == doctest::Approx(1.0).epsilon(1e-15));

  // Homogeneity: doubling omega_p halves the depth.
  MaterialParams doubled{2 * 6.5e15, 8.52e7, "na2"};
  CHECK(skin_depth(doubled) ==
        doctest::Approx(0.5 * skin_depth(sodium())).epsilon(1e-15));
}

TEST_CASE("dimensionless conversion reproduces the collisionless pin") {
  // d = 10 nm, nu = 0, omega = omega_p: w = -i d omega_p / v_F.
  const FilmConfig film{nm_to_cm(10.0), 1.0, 0.0};
  const auto point = make_dimensionless(sodium(), film, 6.5e15);
  CHECK(point.omega_ratio == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(point.collision_ratio == 0.0);
  CHECK(point.thickness_ratio.real() == 0.0);
  CHECK(point.thickness_ratio.imag() ==
        doctest::Approx(-76.291079812206573).epsilon(1e-13));
}

TEST_CASE("dimensionless conversion is definitional at omega = omega_p = nu") {
  const FilmConfig film{nm_to_cm(3.0), 0.5, 1.0};  // eps = nu/omega_p = 1
  const auto point = dimensionless_point(sodium(), film, 1.0);
  CHECK(point.omega_ratio == 1.0);
  CHECK(point.collision_ratio == 1.0);
}

TEST_CASE("thickness ratio keeps eps/Omega as Re/|Im|") {
  const FilmConfig film{nm_to_cm(10.0), 1.0, 0.1};
  const auto point = dimensionless_point(sodium(), film, 0.5);
  CHECK(point.thickness_ratio.real() /
            std::abs(point.thickness_ratio.imag()) ==
        doctest::Approx(0.2).epsilon(1e-14));
  CHECK(point.thickness_ratio.imag() < 0.0);
}

TEST_CASE("dimensionless conversion is homogeneous in the frequency scale") {
  const double lambda = 3.7;
  MaterialParams scaled = sodium();
  scaled.plasma_frequency *= lambda;
  const FilmConfig film{nm_to_cm(5.0), 0.3, 0.05};
  const double omega = 0.4 * sodium().plasma_frequency;

  const auto base = make_dimensionless(sodium(), film, omega);
  const auto rescaled = make_dimensionless(scaled, film, omega * lambda);
  CHECK(rescaled.omega_ratio == doctest::Approx(base.omega_ratio));
  CHECK(rescaled.collision_ratio == base.collision_ratio);
}

TEST_CASE("low-frequency limit reduces the ratio to thickness over free path") {
  // For Omega -> 0 with nu > 0: w -> d nu / v_F, purely real.
  const double eps = 0.2;
  const FilmConfig film{nm_to_cm(8.0), 0.5, eps};
  const auto point = dimensionless_point(sodium(), film, 1e-9);
  const double mean_free_path =
      sodium().fermi_velocity / (eps * sodium().plasma_frequency);
  CHECK(point.thickness_ratio.real() ==
        doctest::Approx(film.thickness / mean_free_path).epsilon(1e-13));
  CHECK(std::abs(point.thickness_ratio.imag()) <
        1e-8 * point.thickness_ratio.real());
}

TEST_CASE("parameter validation rejects out-of-range inputs") {
  CHECK_THROWS_AS((MaterialParams{-1.0, 8.52e7, "bad"}.validate()),
                  invalid_input);
  CHECK_THROWS_AS((MaterialParams{6.5e15, 0.0, "bad"}.validate()),
                  invalid_input);
  CHECK_THROWS_AS((MaterialParams{6.5e15, speed_of_light, "fast"}.validate()),
                  invalid_input);

  CHECK_THROWS_AS((FilmConfig{0.0, 1.0, 0.0}.validate()), invalid_input);
  CHECK_THROWS_AS((FilmConfig{1e-6, 1.5, 0.0}.validate()), invalid_input);
  CHECK_THROWS_AS((FilmConfig{1e-6, -0.1, 0.0}.validate()), invalid_input);
  CHECK_THROWS_AS((FilmConfig{1e-6, 1.0, -1.0}.validate()), invalid_input);

  const FilmConfig film{nm_to_cm(10.0), 1.0, 0.0};
  CHECK_THROWS_AS(make_dimensionless(sodium(), film, 0.0), invalid_input);
  CHECK_THROWS_AS(make_dimensionless(sodium(), film, -1.0), invalid_input);
  CHECK_THROWS_AS(dimensionless_point(sodium(), film, 0.0), invalid_input);
}

TEST_CASE("half thickness is d/2") {
  const FilmConfig film{2e-6, 1.0, 0.0};
  CHECK(film.half_thickness() == 1e-6);
}
