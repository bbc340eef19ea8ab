#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "plasmon/critical.hpp"
#include "plasmon/material.hpp"

// Batch evaluation: frequency sweeps of the dispersion relation, critical-
// frequency tables, and CSV serialization of both. Output is fully
// deterministic (fixed formatting, no timestamps) so identical specs give
// byte-identical files.

namespace plasmon {

enum class SweepMode { dispersion, critical, table1, table2, zratio };

std::string to_string(SweepMode mode);

// Everything needed to reproduce a run. Vectors are cartesian-product axes:
// a dispersion sweep covers every (d, p, eps) combination over the Omega
// grid.
struct SweepSpec {
  SweepMode mode = SweepMode::dispersion;
  MaterialParams material = sodium();
  std::vector<double> d_nm = {10.0};  // film thicknesses, nm
  std::vector<double> specularities = {1.0};
  std::vector<double> eps_values = {1e-5};
  double omega_min = 0.01;  // Omega grid: omega_steps points, both ends
  double omega_max = 0.99;  //   included
  int omega_steps = 99;
  double tol = 1e-10;
  int threads = 1;

  // Throws invalid_input on out-of-range values (Omega bounds outside
  // (0, 2], omega_steps < 2, empty axes, bad tol/threads, ...).
  void validate() const;
};

// Per-row error codes (kept numeric so they survive the CSV round trip).
enum class RowStatus : int {
  ok = 0,
  resonance = 1,  // impedance denominator degenerate at this frequency
  numerical = 2,  // conductivity series / dispersion evaluation failed
};

// One evaluated frequency point. When status != ok the numeric results are
// meaningless and are serialized as empty fields; k and alpha are zeroed so
// equal sweeps compare equal.
struct SweepRow {
  double omega_ratio = 0.0;
  double eps = 0.0;
  double d_nm = 0.0;
  double specularity = 0.0;
  std::complex<double> k{0.0, 0.0};      // 1/cm
  std::complex<double> alpha{0.0, 0.0};  // 1/cm
  bool exists = false;
  RowStatus status = RowStatus::ok;
};

// Evaluate the dispersion relation over the spec's grid. Row order is the
// deterministic nested loop (d, p, eps, Omega) regardless of spec.threads;
// per-point failures become error rows instead of aborting the sweep.
std::vector<SweepRow> run_dispersion_sweep(const SweepSpec& spec);

// Critical-frequency run: one row per (d, p, eps) combination.
struct BandRow {
  double d_nm = 0.0;
  double specularity = 0.0;
  double eps = 0.0;
  CriticalBand band;
};

// For mode critical, scans the spec's axes. Modes table1/table2 ignore the
// axes and evaluate the two reference tables for sodium:
//   table1: p = 1,   eps = 0.1, d = 1..9 nm (lower critical frequency)
//   table2: p = 0.1, eps = 0.1, d = 1..10 nm (both critical frequencies)
std::vector<BandRow> run_table(const SweepSpec& spec);

// The axes a table run actually evaluates: for table1/table2 the pinned
// grids above replace the spec's axes; other modes pass through unchanged.
// CSV metadata is written from the resolved spec so it echoes the grid that
// produced the rows.
SweepSpec resolve_table_axes(SweepSpec spec);

// CSV with '#'-prefixed metadata lines, a header row, and %.17g numbers
// (lossless double round trip). Columns:
//   omega_ratio,eps,d_nm,p,re_k,im_k,re_alpha,im_alpha,exists,error,omega_rad_s
void write_sweep_csv(std::ostream& out, const SweepSpec& spec,
                     const std::vector<SweepRow>& rows);

// zratio mode: same grid as a dispersion sweep but the quantity of interest
// is the damping quality ratio Re k / Im k (columns
// omega_ratio,eps,d_nm,p,z_ratio,error).
struct ZRatioRow {
  double omega_ratio = 0.0;
  double eps = 0.0;
  double d_nm = 0.0;
  double specularity = 0.0;
  double z_ratio = 0.0;
  RowStatus status = RowStatus::ok;
};

std::vector<ZRatioRow> run_zratio_sweep(const SweepSpec& spec);
void write_zratio_csv(std::ostream& out, const SweepSpec& spec,
                      const std::vector<ZRatioRow>& rows);

// Band rows as CSV (columns d_nm,p,eps,omega0,omega1,band_nonempty; empty
// fields for absent endpoints).
void write_band_csv(std::ostream& out, const SweepSpec& spec,
                    const std::vector<BandRow>& rows);

// Human-readable rendering of a band table (three decimals, as the
// reference tables are quoted).
std::string format_band_table(const std::vector<BandRow>& rows,
                              SweepMode mode);

// Parse a dispersion-sweep CSV produced by write_sweep_csv (metadata lines
// are skipped; used for round-trip verification and by downstream tooling).
// Throws invalid_input on malformed rows.
std::vector<SweepRow> parse_sweep_csv(std::istream& in);

}  // namespace plasmon
