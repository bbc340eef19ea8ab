#include "plasmon/critical.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "plasmon/dispersion.hpp"
#include "plasmon/errors.hpp"

namespace plasmon {

namespace detail {

ScanResult scan_sign_changes(const std::function<double(double)>& f,
                             double lo, double hi, int n, double xtol) {
  if (!(lo < hi) || n < 2) {
    throw invalid_input("sign-change scan requires lo < hi and n >= 2");
  }
  if (!(xtol > 0.0)) {
    throw invalid_input("sign-change scan requires xtol > 0");
  }

  ScanResult result;
  const double step = (hi - lo) / (n - 1);

  double prev_x = 0.0;
  double prev_f = 0.0;
  bool have_prev = false;
  bool have_start = false;

  for (int i = 0; i < n; ++i) {
    const double x = (i == n - 1) ? hi : lo + i * step;
    const double fx = f(x);
    if (std::isnan(fx)) {
      have_prev = false;  // never bracket across a failed evaluation
      continue;
    }
    if (!have_start) {
      result.negative_at_start = fx < 0.0;
      have_start = true;
    }
    if (fx == 0.0) {
      result.crossings.push_back(x);
      have_prev = false;  // the node itself is the root; restart bracketing
      continue;
    }
    if (have_prev && std::signbit(prev_f) != std::signbit(fx)) {
      // Bisect [prev_x, x] down to xtol; endpoints already evaluated.
      double a = prev_x, fa = prev_f;
      double b = x;
      while (b - a > xtol) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if (std::isnan(fm)) break;  // give up refining; keep the bracket mid
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if (std::signbit(fm) == std::signbit(fa)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      result.crossings.push_back(0.5 * (a + b));
    }
    prev_x = x;
    prev_f = fx;
    have_prev = true;
  }

  if (!have_start) {
    throw invalid_input("sign-change scan: no node could be evaluated");
  }
  return result;
}

CriticalBand band_from_crossings(const ScanResult& scan) {
  const auto& roots = scan.crossings;
  if (roots.size() > 2) {
    std::ostringstream msg;
    msg << "existence-band scan found " << roots.size()
        << " sign changes; a single band cannot explain them";
    throw ambiguous_band(msg.str(), roots);
  }

  CriticalBand band;
  if (roots.empty()) {
    // Uniform sign: the band is the whole scanned range or nothing.
    band.band_nonempty = scan.negative_at_start;
    if (scan.negative_at_start) band.omega0 = 0.0;
    return band;
  }
  if (roots.size() == 1) {
    band.band_nonempty = true;
    if (scan.negative_at_start) {
      band.omega0 = 0.0;  // band runs from zero up to the single crossing
      band.omega1 = roots[0];
    } else {
      band.omega0 = roots[0];  // band opens at the crossing and stays open
    }
    return band;
  }
  // Two crossings: a closed band. The scan starting inside the band with
  // two more crossings ahead would mean three band edges; reject.
  if (scan.negative_at_start) {
    std::ostringstream msg;
    msg << "existence-band scan: negative start with " << roots.size()
        << " crossings is not a single band";
    throw ambiguous_band(msg.str(), roots);
  }
  band.band_nonempty = true;
  band.omega0 = roots[0];
  band.omega1 = roots[1];
  return band;
}

}  // namespace detail

CriticalBand find_critical_band(const FilmConfig& film,
                                const MaterialParams& material,
                                const BandSearchOptions& options) {
  material.validate();
  film.validate();
  if (options.grid_n < 64) {
    throw invalid_input("band search requires grid_n >= 64");
  }
  if (!(options.omega_tol > 0.0) || !(options.quad_tol > 0.0)) {
    throw invalid_input("band search tolerances must be positive");
  }
  if (!(options.omega_min > 0.0) || !(options.margin > 0.0) ||
      !(options.omega_min < 1.0 - options.margin)) {
    throw invalid_input("band search domain [omega_min, 1 - margin] is empty");
  }

  // Overdamping classifier: h < 0 exactly where the mode is oscillatory
  // (|Im k| < Re k). Using |Im k| keeps h negative across the deep-band
  // region where Im k dips below zero, so a physical band produces at most
  // two crossings. Points that fail to evaluate (resonance guard) poison
  // their node only.
  const auto classifier = [&](double omega_ratio) -> double {
    try {
      const auto point = dimensionless_point(material, film, omega_ratio);
      const auto mode = k_general(point, film, material, options.quad_tol);
      return std::abs(mode.k.imag()) - mode.k.real();
    } catch (const resonance_singularity&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };

  const auto scan = detail::scan_sign_changes(
      classifier, options.omega_min, 1.0 - options.margin, options.grid_n,
      options.omega_tol);
  return detail::band_from_crossings(scan);
}

bool existence_predicate(const DimensionlessPoint& point,
                         const FilmConfig& film,
                         const MaterialParams& material, double tol) {
  const auto mode = k_general(point, film, material, tol);
  return mode.exists_as_surface_wave;
}

}  // namespace plasmon
