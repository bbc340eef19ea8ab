#include "plasmon/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "plasmon/constants.hpp"
#include "plasmon/dispersion.hpp"
#include "plasmon/errors.hpp"
#include "plasmon/version.hpp"

namespace plasmon {

namespace {

// %.17g preserves every double bit-exactly across a write/parse round trip.
std::string fmt17(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

// Metadata lines are provenance for humans, not parsed back; 12 digits reads
// cleanly (0.99, 1e-05) while still identifying the run.
std::string fmt_meta(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string join_meta(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += fmt_meta(values[i]);
  }
  return out;
}

double omega_at(const SweepSpec& spec, int j) {
  if (j == spec.omega_steps - 1) return spec.omega_max;  // exact endpoint
  return spec.omega_min +
         j * (spec.omega_max - spec.omega_min) / (spec.omega_steps - 1);
}

FilmConfig film_for(double d_nm, double p, double eps) {
  return FilmConfig{nm_to_cm(d_nm), p, eps};
}

// Run fn(i) for every i in [0, count), spreading work over `threads` OS
// threads. Each index owns its output slot, so scheduling cannot affect the
// result; the first exception (if any) is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(threads, 1), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next.fetch_add(1); i < count;
             i = next.fetch_add(1)) {
          fn(i);
        }
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& worker : pool) worker.join();
  if (failure) std::rethrow_exception(failure);
}

void write_metadata(std::ostream& out, const SweepSpec& spec) {
  out << "# film-plasmon " << version << ' ' << to_string(spec.mode)
      << " sweep\n";
  out << "# material: " << spec.material.label
      << " (omega_p = " << fmt_meta(spec.material.plasma_frequency)
      << " rad/s, v_F = " << fmt_meta(spec.material.fermi_velocity)
      << " cm/s)\n";
  out << "# axes: d_nm = [" << join_meta(spec.d_nm) << "]; p = ["
      << join_meta(spec.specularities) << "]; eps = ["
      << join_meta(spec.eps_values) << "]\n";
  const bool band_mode = spec.mode == SweepMode::critical ||
                         spec.mode == SweepMode::table1 ||
                         spec.mode == SweepMode::table2;
  if (band_mode) {
    const BandSearchOptions defaults;
    out << "# band search: " << defaults.grid_n << "-point scan in ["
        << fmt_meta(defaults.omega_min) << ", " << fmt_meta(1.0 - defaults.margin)
        << "], bisection to " << fmt_meta(defaults.omega_tol) << "\n";
  } else {
    out << "# omega_ratio: " << spec.omega_steps << " points in ["
        << fmt_meta(spec.omega_min) << ", " << fmt_meta(spec.omega_max)
        << "]\n";
  }
  out << "# tol = " << fmt_meta(spec.tol) << "\n";
}

}  // namespace

std::string to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::dispersion: return "dispersion";
    case SweepMode::critical: return "critical";
    case SweepMode::table1: return "table1";
    case SweepMode::table2: return "table2";
    case SweepMode::zratio: return "zratio";
  }
  return "unknown";
}

void SweepSpec::validate() const {
  material.validate();
  if (d_nm.empty() || specularities.empty() || eps_values.empty()) {
    throw invalid_input("sweep axes (d_nm, p, eps) must be non-empty");
  }
  for (double d : d_nm) {
    if (!std::isfinite(d) || d <= 0.0) {
      throw invalid_input("sweep thickness values must be positive (nm)");
    }
  }
  for (double p : specularities) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
      throw invalid_input("sweep specularity values must lie in [0, 1]");
    }
  }
  for (double eps : eps_values) {
    if (!std::isfinite(eps) || eps < 0.0) {
      throw invalid_input("sweep eps values must be >= 0");
    }
  }
  if (!std::isfinite(omega_min) || !std::isfinite(omega_max) ||
      omega_min <= 0.0 || omega_max > 2.0 || omega_min >= omega_max) {
    throw invalid_input(
        "sweep frequency range must satisfy 0 < omega_min < omega_max <= 2");
  }
  if (omega_steps < 2) {
    throw invalid_input("sweep needs omega_steps >= 2");
  }
  if (!std::isfinite(tol) || tol <= 0.0) {
    throw invalid_input("sweep tol must be positive");
  }
  if (threads < 1 || threads > 1024) {
    throw invalid_input("sweep threads must lie in [1, 1024]");
  }
}

std::vector<SweepRow> run_dispersion_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::size_t per_axis = static_cast<std::size_t>(spec.omega_steps);
  const std::size_t total = spec.d_nm.size() * spec.specularities.size() *
                            spec.eps_values.size() * per_axis;
  std::vector<SweepRow> rows(total);

  parallel_for(total, spec.threads, [&](std::size_t index) {
    // Unflatten index in (d, p, eps, Omega) nesting: Omega varies fastest so
    // each dispersion curve is contiguous in the output.
    std::size_t rest = index;
    const int j = static_cast<int>(rest % per_axis);
    rest /= per_axis;
    const double eps = spec.eps_values[rest % spec.eps_values.size()];
    rest /= spec.eps_values.size();
    const double p = spec.specularities[rest % spec.specularities.size()];
    rest /= spec.specularities.size();
    const double d_nm = spec.d_nm[rest];

    SweepRow& row = rows[index];
    row.omega_ratio = omega_at(spec, j);
    row.eps = eps;
    row.d_nm = d_nm;
    row.specularity = p;
    const FilmConfig film = film_for(d_nm, p, eps);
    try {
      const auto point =
          dimensionless_point(spec.material, film, row.omega_ratio);
      const auto mode = k_general(point, film, spec.material, spec.tol);
      row.k = mode.k;
      row.alpha = mode.alpha;
      row.exists = mode.exists_as_surface_wave;
    } catch (const resonance_singularity&) {
      row.status = RowStatus::resonance;
    } catch (const numerical_error&) {
      row.status = RowStatus::numerical;
    }
  });
  return rows;
}

std::vector<ZRatioRow> run_zratio_sweep(const SweepSpec& spec) {
  spec.validate();
  const auto sweep = run_dispersion_sweep(spec);
  std::vector<ZRatioRow> rows(sweep.size());
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    const SweepRow& in = sweep[i];
    rows[i] = ZRatioRow{in.omega_ratio,
                        in.eps,
                        in.d_nm,
                        in.specularity,
                        in.status == RowStatus::ok
                            ? in.k.real() / in.k.imag()
                            : 0.0,
                        in.status};
  }
  return rows;
}

SweepSpec resolve_table_axes(SweepSpec spec) {
  // The reference tables pin their own grids; the spec's axes apply only to
  // free-form critical scans.
  if (spec.mode == SweepMode::table1) {
    spec.d_nm = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    spec.specularities = {1.0};
    spec.eps_values = {0.1};
  } else if (spec.mode == SweepMode::table2) {
    spec.d_nm = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    spec.specularities = {0.1};
    spec.eps_values = {0.1};
  }
  return spec;
}

std::vector<BandRow> run_table(const SweepSpec& spec) {
  spec.validate();
  const SweepSpec resolved = resolve_table_axes(spec);

  std::vector<BandRow> rows;
  rows.reserve(resolved.d_nm.size() * resolved.specularities.size() *
               resolved.eps_values.size());
  for (double d_nm : resolved.d_nm) {
    for (double p : resolved.specularities) {
      for (double eps : resolved.eps_values) {
        BandSearchOptions options;
        options.quad_tol = spec.tol;
        BandRow row;
        row.d_nm = d_nm;
        row.specularity = p;
        row.eps = eps;
        row.band = find_critical_band(film_for(d_nm, p, eps),
                                      spec.material, options);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const SweepSpec& spec,
                     const std::vector<SweepRow>& rows) {
  write_metadata(out, spec);
  out << "# k and alpha in 1/cm; omega_rad_s in rad/s\n";
  out << "omega_ratio,eps,d_nm,p,re_k,im_k,re_alpha,im_alpha,exists,error,"
         "omega_rad_s\n";
  for (const SweepRow& row : rows) {
    out << fmt17(row.omega_ratio) << ',' << fmt17(row.eps) << ','
        << fmt17(row.d_nm) << ',' << fmt17(row.specularity) << ',';
    if (row.status == RowStatus::ok) {
      out << fmt17(row.k.real()) << ',' << fmt17(row.k.imag()) << ','
          << fmt17(row.alpha.real()) << ',' << fmt17(row.alpha.imag());
    } else {
      out << ",,,";
    }
    out << ',' << (row.exists ? 1 : 0) << ',' << static_cast<int>(row.status)
        << ','
        << fmt17(row.omega_ratio * spec.material.plasma_frequency) << '\n';
  }
  if (!out) throw error("failed to write sweep CSV");
}

void write_zratio_csv(std::ostream& out, const SweepSpec& spec,
                      const std::vector<ZRatioRow>& rows) {
  write_metadata(out, spec);
  out << "# z_ratio = Re k / Im k (dimensionless)\n";
  out << "omega_ratio,eps,d_nm,p,z_ratio,error\n";
  for (const ZRatioRow& row : rows) {
    out << fmt17(row.omega_ratio) << ',' << fmt17(row.eps) << ','
        << fmt17(row.d_nm) << ',' << fmt17(row.specularity) << ',';
    if (row.status == RowStatus::ok) out << fmt17(row.z_ratio);
    out << ',' << static_cast<int>(row.status) << '\n';
  }
  if (!out) throw error("failed to write z-ratio CSV");
}

void write_band_csv(std::ostream& out, const SweepSpec& spec,
                    const std::vector<BandRow>& rows) {
  write_metadata(out, resolve_table_axes(spec));
  out << "d_nm,p,eps,omega0,omega1,band_nonempty\n";
  for (const BandRow& row : rows) {
    out << fmt17(row.d_nm) << ',' << fmt17(row.specularity) << ','
        << fmt17(row.eps) << ',';
    if (row.band.omega0) out << fmt17(*row.band.omega0);
    out << ',';
    if (row.band.omega1) out << fmt17(*row.band.omega1);
    out << ',' << (row.band.band_nonempty ? 1 : 0) << '\n';
  }
  if (!out) throw error("failed to write band CSV");
}

std::string format_band_table(const std::vector<BandRow>& rows,
                              SweepMode mode) {
  std::ostringstream out;
  const bool with_upper = mode != SweepMode::table1;
  const bool with_film = mode == SweepMode::critical;

  out << std::setw(6) << "d_nm";
  if (with_film) out << std::setw(8) << "p" << std::setw(10) << "eps";
  out << std::setw(10) << "omega0";
  if (with_upper) out << std::setw(10) << "omega1";
  out << '\n';

  out << std::fixed;
  for (const BandRow& row : rows) {
    out << std::setw(6) << std::setprecision(0) << row.d_nm;
    if (with_film) {
      out << std::setw(8) << std::setprecision(2) << row.specularity
          << std::setw(10) << std::setprecision(4) << row.eps;
    }
    out << std::setprecision(3);
    if (row.band.omega0) {
      out << std::setw(10) << *row.band.omega0;
    } else {
      out << std::setw(10) << "-";
    }
    if (with_upper) {
      if (row.band.omega1) {
        out << std::setw(10) << *row.band.omega1;
      } else {
        out << std::setw(10) << "-";
      }
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else if (c != '\r') {
      current += c;
    }
  }
  fields.push_back(current);
  return fields;
}

double parse_double(const std::string& field, const char* what) {
  const char* begin = field.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw invalid_input(std::string("sweep CSV: malformed ") + what + " '" +
                        field + "'");
  }
  return value;
}

}  // namespace

std::vector<SweepRow> parse_sweep_csv(std::istream& in) {
  constexpr const char* expected_header =
      "omega_ratio,eps,d_nm,p,re_k,im_k,re_alpha,im_alpha,exists,error,"
      "omega_rad_s";
  std::vector<SweepRow> rows;
  std::string line;
  bool seen_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!seen_header) {
      if (line != expected_header) {
        throw invalid_input("sweep CSV: unexpected header '" + line + "'");
      }
      seen_header = true;
      continue;
    }
    const auto fields = split_fields(line);
    if (fields.size() != 11) {
      throw invalid_input("sweep CSV: expected 11 fields, got " +
                          std::to_string(fields.size()));
    }
    SweepRow row;
    row.omega_ratio = parse_double(fields[0], "omega_ratio");
    row.eps = parse_double(fields[1], "eps");
    row.d_nm = parse_double(fields[2], "d_nm");
    row.specularity = parse_double(fields[3], "p");
    row.status = static_cast<RowStatus>(
        static_cast<int>(parse_double(fields[9], "error")));
    if (row.status == RowStatus::ok) {
      row.k = {parse_double(fields[4], "re_k"), parse_double(fields[5], "im_k")};
      row.alpha = {parse_double(fields[6], "re_alpha"),
                   parse_double(fields[7], "im_alpha")};
    }
    row.exists = parse_double(fields[8], "exists") != 0.0;
    rows.push_back(row);
  }
  if (!seen_header) {
    throw invalid_input("sweep CSV: missing header row");
  }
  return rows;
}

}  // namespace plasmon
