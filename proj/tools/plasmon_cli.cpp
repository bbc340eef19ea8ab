// Command-line driver: dispersion sweeps, damping-quality ratios, and
// critical-frequency tables for surface plasma oscillations in thin films.
//
// Exit codes: 0 success, 2 configuration/input errors, 3 numerical failures.

#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plasmon/errors.hpp"
#include "plasmon/sweep.hpp"
#include "plasmon/version.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config_error = 2;
constexpr int exit_numerical_error = 3;

plasmon::SweepMode parse_mode(const std::string& name) {
  if (name == "dispersion") return plasmon::SweepMode::dispersion;
  if (name == "critical") return plasmon::SweepMode::critical;
  if (name == "table1") return plasmon::SweepMode::table1;
  if (name == "table2") return plasmon::SweepMode::table2;
  if (name == "zratio") return plasmon::SweepMode::zratio;
  throw plasmon::invalid_input("unknown mode '" + name + "'");
}

int run(const plasmon::SweepSpec& spec, std::ostream& csv_out,
        std::ostream& report_out) {
  using plasmon::SweepMode;
  switch (spec.mode) {
    case SweepMode::dispersion: {
      const auto rows = plasmon::run_dispersion_sweep(spec);
      plasmon::write_sweep_csv(csv_out, spec, rows);
      report_out << "dispersion sweep: " << rows.size() << " rows\n";
      return exit_ok;
    }
    case SweepMode::zratio: {
      const auto rows = plasmon::run_zratio_sweep(spec);
      plasmon::write_zratio_csv(csv_out, spec, rows);
      report_out << "z-ratio sweep: " << rows.size() << " rows\n";
      return exit_ok;
    }
    case SweepMode::critical:
    case SweepMode::table1:
    case SweepMode::table2: {
      const auto rows = plasmon::run_table(spec);
      plasmon::write_band_csv(csv_out, spec, rows);
      report_out << plasmon::format_band_table(rows, spec.mode);
      return exit_ok;
    }
  }
  return exit_config_error;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "film-plasmon: spatial dispersion k(omega) and existence bands of "
      "surface plasma oscillations in thin metal films"};
  app.set_version_flag("--version", std::string(plasmon::version));

  std::string mode_name = "dispersion";
  app.add_option("--mode", mode_name,
                 "dispersion | critical | table1 | table2 | zratio")
      ->check(CLI::IsMember(
          {"dispersion", "critical", "table1", "table2", "zratio"}));

  plasmon::SweepSpec spec;
  app.add_option("--d-nm", spec.d_nm, "film thicknesses in nm (comma list)")
      ->delimiter(',');
  app.add_option("--p", spec.specularities,
                 "surface specularity values in [0,1] (comma list)")
      ->delimiter(',');
  auto* eps_option =
      app.add_option("--eps", spec.eps_values,
                     "collision rates as nu/omega_p (comma list)")
          ->delimiter(',');
  app.add_option("--nu-ratio", spec.eps_values,
                 "alias for --eps: collision rate over plasma frequency")
      ->delimiter(',')
      ->excludes(eps_option);

  app.add_option("--omega-min", spec.omega_min,
                 "lower end of the omega/omega_p grid (0, 2]");
  app.add_option("--omega-max", spec.omega_max,
                 "upper end of the omega/omega_p grid (0, 2]");
  app.add_option("--omega-steps", spec.omega_steps,
                 "number of frequency grid points (>= 2)");

  std::string material_name = "sodium";
  app.add_option("--material", material_name, "sodium | custom")
      ->check(CLI::IsMember({"sodium", "custom"}));
  double custom_omega_p = 0.0;
  double custom_v_f = 0.0;
  auto* omega_p_option = app.add_option(
      "--omega-p", custom_omega_p, "custom plasma frequency (rad/s)");
  auto* v_f_option =
      app.add_option("--v-f", custom_v_f, "custom Fermi velocity (cm/s)");

  std::string out_path = "-";
  app.add_option("--out", out_path, "output CSV path ('-' = stdout)");
  app.add_option("--tol", spec.tol, "relative tolerance for conductivity");
  app.add_option("--threads", spec.threads, "worker threads for sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_config_error;
  }

  try {
    spec.mode = parse_mode(mode_name);
    if (material_name == "custom") {
      if (omega_p_option->count() == 0 || v_f_option->count() == 0) {
        std::cerr << "error: --material custom requires --omega-p and --v-f\n";
        return exit_config_error;
      }
      spec.material =
          plasmon::MaterialParams{custom_omega_p, custom_v_f, "custom"};
    } else if (omega_p_option->count() != 0 || v_f_option->count() != 0) {
      std::cerr << "error: --omega-p/--v-f are only valid with "
                   "--material custom\n";
      return exit_config_error;
    }
    spec.validate();

    // Open the sink before computing anything, so an unwritable path fails
    // fast. With --out -, the CSV goes to stdout and the human-readable
    // report moves to stderr to keep the stream machine-clean.
    if (out_path == "-") {
      return run(spec, std::cout, std::cerr);
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open '" << out_path << "' for writing\n";
      return exit_config_error;
    }
    const int code = run(spec, file, std::cout);
    file.flush();
    if (!file) {
      std::cerr << "error: writing '" << out_path << "' failed\n";
      return exit_config_error;
    }
    if (code == exit_ok) {
      std::cout << "csv written to " << out_path << "\n";
    }
    return code;
  } catch (const plasmon::invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_config_error;
  } catch (const plasmon::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return exit_numerical_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_numerical_error;
  }
}
