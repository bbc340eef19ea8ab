#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "plasmon/material.hpp"

// Critical frequencies bounding the existence band of the surface
// oscillation: the sub-band of 0 < Omega < 1 where the mode is oscillatory
// (Im k < Re k) rather than overdamped.

namespace plasmon {

// Band endpoints in units of the plasma frequency. omega0 == 0 means the
// band extends down to zero frequency; an absent omega1 means the band
// reaches the upper end of the scanned range.
struct CriticalBand {
  std::optional<double> omega0;
  std::optional<double> omega1;
  bool band_nonempty = false;
};

struct BandSearchOptions {
  int grid_n = 2048;        // coarse-scan resolution
  double omega_tol = 1e-6;  // bisection width for each endpoint (in Omega)
  double quad_tol = 1e-10;  // tolerance handed to the conductivity factor
  double omega_min = 1e-3;  // scan domain [omega_min, 1 - margin]
  double margin = 1e-3;
};

// Locate the existence band for a film: scan the overdamping classifier
//   h(Omega) = |Im k| - Re k
// (negative inside the band) on a uniform grid, then bisect each sign
// change to omega_tol. Reports omega0 = 0 when the band already exists at
// the low end of the scan. Throws ambiguous_band if more than two sign
// changes appear, and propagates numerical errors from the dispersion
// evaluation. Deterministic: identical inputs give bit-identical results.
CriticalBand find_critical_band(const FilmConfig& film,
                                const MaterialParams& material,
                                const BandSearchOptions& options = {});

// The pointwise existence predicate itself: Im k < Re k at this frequency.
bool existence_predicate(const DimensionlessPoint& point,
                         const FilmConfig& film,
                         const MaterialParams& material, double tol = 1e-10);

namespace detail {

// Sign-change scan of f over [lo, hi] on n uniform nodes; each change is
// refined by bisection to width xtol. Nodes where f is NaN are skipped (no
// bracket is formed across them). An exact zero at a node counts as a
// crossing at that node. Returns the crossing abscissas in increasing order
// and the sign of f at the first valid node.
struct ScanResult {
  std::vector<double> crossings;
  bool negative_at_start = false;
};

ScanResult scan_sign_changes(const std::function<double(double)>& f,
                             double lo, double hi, int n, double xtol);

// Fold a crossing list into a band. 0 crossings: band is everything or
// nothing depending on the starting sign; 1 crossing: half-open band;
// 2 crossings: closed band. More than 2 throws ambiguous_band.
CriticalBand band_from_crossings(const ScanResult& scan);

}  // namespace detail

}  // namespace plasmon
