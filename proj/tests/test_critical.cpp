#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "plasmon/constants.hpp"
#include "plasmon/critical.hpp"
#include "plasmon/errors.hpp"
#include "plasmon/material.hpp"

using namespace plasmon;
using plasmon::detail::band_from_crossings;
using plasmon::detail::scan_sign_changes;
using plasmon::detail::ScanResult;

TEST_CASE("sign-change scan finds analytic roots") {
  const auto f = [](double x) { return std::cos(3.14159265358979324 * x); };
  const auto scan = scan_sign_changes(f, 0.0, 2.0, 101, 1e-10);
  REQUIRE(scan.crossings.size() == 2);
  CHECK(scan.crossings[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(scan.crossings[1] == doctest::Approx(1.5).epsilon(1e-9));
  CHECK_FALSE(scan.negative_at_start);
}

TEST_CASE("sign-change scan records a negative start") {
  const auto f = [](double x) { return x - 0.7; };
  const auto scan = scan_sign_changes(f, 0.1, 1.0, 64, 1e-9);
  REQUIRE(scan.crossings.size() == 1);
  CHECK(scan.crossings[0] == doctest::Approx(0.7).epsilon(1e-7));
  CHECK(scan.negative_at_start);
}

TEST_CASE("sign-change scan treats an exact node zero as the root") {
  const auto f = [](double x) { return x - 0.5; };
  // Nodes land exactly on 0, 0.5, 1.
  const auto scan = scan_sign_changes(f, 0.0, 1.0, 3, 1e-12);
  REQUIRE(scan.crossings.size() == 1);
  CHECK(scan.crossings[0] == 0.5);
}

TEST_CASE("sign-change scan never brackets across failed evaluations") {
  const auto f = [](double x) {
    if (x > 0.45 && x < 0.65) return std::numeric_limits<double>::quiet_NaN();
    return x - 0.55;  // the sign change hides inside the failed window
  };
  const auto scan = scan_sign_changes(f, 0.0, 1.0, 201, 1e-9);
  CHECK(scan.crossings.empty());
  CHECK(scan.negative_at_start);
}

TEST_CASE("crossing lists map onto bands") {
  const auto roots = [](std::vector<double> r, bool neg) {
    ScanResult scan;
    scan.crossings = std::move(r);
    scan.negative_at_start = neg;
    return scan;
  };

  SUBCASE("no crossings, positive start: empty band") {
    const auto band = band_from_crossings(roots({}, false));
    CHECK_FALSE(band.band_nonempty);
    CHECK_FALSE(band.omega0.has_value());
    CHECK_FALSE(band.omega1.has_value());
  }
  SUBCASE("no crossings, negative start: band from zero, open top") {
    const auto band = band_from_crossings(roots({}, true));
    CHECK(band.band_nonempty);
    CHECK(band.omega0 == 0.0);
    CHECK_FALSE(band.omega1.has_value());
  }
  SUBCASE("one crossing, negative start: band from zero") {
    const auto band = band_from_crossings(roots({0.42}, true));
    CHECK(band.band_nonempty);
    CHECK(band.omega0 == 0.0);
    CHECK(band.omega1 == 0.42);
  }
  SUBCASE("one crossing, positive start: open-topped band") {
    const auto band = band_from_crossings(roots({0.13}, false));
    CHECK(band.band_nonempty);
    CHECK(band.omega0 == 0.13);
    CHECK_FALSE(band.omega1.has_value());
  }
  SUBCASE("two crossings, positive start: closed band") {
    const auto band = band_from_crossings(roots({0.1, 0.9}, false));
    CHECK(band.band_nonempty);
    CHECK(band.omega0 == 0.1);
    CHECK(band.omega1 == 0.9);
  }
  SUBCASE("two crossings, negative start: not a single band") {
    CHECK_THROWS_AS(band_from_crossings(roots({0.1, 0.9}, true)),
                    ambiguous_band);
  }
  SUBCASE("three crossings: ambiguous, crossings reported") {
    try {
      band_from_crossings(roots({0.1, 0.5, 0.9}, false));
      FAIL("expected ambiguous_band");
    } catch (const ambiguous_band& e) {
      CHECK(e.crossings().size() == 3);
      CHECK(e.crossings()[1] == 0.5);
    }
  }
}

TEST_CASE("mirror-surface lower critical frequencies match the references") {
  // d = 1, 5, 9 nm at eps = 0.1, p = 1; full grid covered by acceptance.
  const struct {
    double d_nm;
    double omega0;
  } rows[] = {{1.0, 0.101}, {5.0, 0.086}, {9.0, 0.023}};
  for (const auto& row : rows) {
    const FilmConfig film{nm_to_cm(row.d_nm), 1.0, 0.1};
    const auto band = find_critical_band(film, sodium());
    CAPTURE(row.d_nm);
    REQUIRE(band.band_nonempty);
    REQUIRE(band.omega0.has_value());
    CHECK(std::abs(*band.omega0 - row.omega0) < 0.005);
    // The scan tops out below the resonance; the upper crossing for these
    // parameters sits inside the scanned range.
    CHECK(band.omega1.has_value());
  }
}

TEST_CASE("rough-surface bands match the two-sided references") {
  const FilmConfig film{nm_to_cm(5.0), 0.1, 0.1};
  const auto band = find_critical_band(film, sodium());
  REQUIRE(band.band_nonempty);
  REQUIRE(band.omega0.has_value());
  REQUIRE(band.omega1.has_value());
  CHECK(std::abs(*band.omega0 - 0.098) < 0.005);
  CHECK(std::abs(*band.omega1 - 0.934) < 0.005);
  CHECK(*band.omega0 < *band.omega1);
  CHECK(*band.omega1 < 1.0);
}

TEST_CASE("thick rough films keep the band open down to zero frequency") {
  const FilmConfig film{nm_to_cm(10.0), 0.1, 0.1};
  const auto band = find_critical_band(film, sodium());
  REQUIRE(band.band_nonempty);
  CHECK(band.omega0 == 0.0);
  REQUIRE(band.omega1.has_value());
  CHECK(std::abs(*band.omega1 - 0.937) < 0.005);
}

TEST_CASE("collisionless mirror films have an all-frequency band") {
  // eps = 0, p = 1: no damping at all below the resonance, so the
  // overdamping classifier never goes positive.
  const FilmConfig film{nm_to_cm(10.0), 1.0, 0.0};
  const auto band = find_critical_band(film, sodium());
  CHECK(band.band_nonempty);
  CHECK(band.omega0 == 0.0);
  CHECK_FALSE(band.omega1.has_value());
}

TEST_CASE("band search is deterministic") {
  const FilmConfig film{nm_to_cm(3.0), 0.1, 0.1};
  const auto first = find_critical_band(film, sodium());
  const auto second = find_critical_band(film, sodium());
  REQUIRE(first.omega0.has_value());
  REQUIRE(second.omega0.has_value());
  CHECK(*first.omega0 == *second.omega0);  // bit-identical
  REQUIRE(first.omega1.has_value());
  REQUIRE(second.omega1.has_value());
  CHECK(*first.omega1 == *second.omega1);
}

TEST_CASE("existence predicate flips at the band edges") {
  const FilmConfig film{nm_to_cm(5.0), 0.1, 0.1};
  const auto inside = dimensionless_point(sodium(), film, 0.5);
  const auto below = dimensionless_point(sodium(), film, 0.05);
  const auto above = dimensionless_point(sodium(), film, 0.96);
  CHECK(existence_predicate(inside, film, sodium()));
  CHECK_FALSE(existence_predicate(below, film, sodium()));
  CHECK_FALSE(existence_predicate(above, film, sodium()));
}

TEST_CASE("band search rejects degenerate options") {
  const FilmConfig film{nm_to_cm(5.0), 0.1, 0.1};
  BandSearchOptions options;
  options.grid_n = 32;
  CHECK_THROWS_AS(find_critical_band(film, sodium(), options), invalid_input);

  options = BandSearchOptions{};
  options.omega_tol = 0.0;
  CHECK_THROWS_AS(find_critical_band(film, sodium(), options), invalid_input);

  options = BandSearchOptions{};
  options.omega_min = 0.9999;  // empty domain against the default margin
  CHECK_THROWS_AS(find_critical_band(film, sodium(), options), invalid_input);
}

TEST_CASE("scan input validation") {
  const auto f = [](double) { return 1.0; };
  CHECK_THROWS_AS(scan_sign_changes(f, 1.0, 0.0, 64, 1e-6), invalid_input);
  CHECK_THROWS_AS(scan_sign_changes(f, 0.0, 1.0, 1, 1e-6), invalid_input);
  CHECK_THROWS_AS(scan_sign_changes(f, 0.0, 1.0, 64, 0.0), invalid_input);
  const auto all_nan = [](double) {
    return std::numeric_limits<double>::quiet_NaN();
  };
  CHECK_THROWS_AS(scan_sign_changes(all_nan, 0.0, 1.0, 64, 1e-6),
                  invalid_input);
}
