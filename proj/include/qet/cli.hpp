// Copyright 2026 The qet-steady Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 success, 1 I/O failure, 2 configuration
// error, 3 numerical failure. Errors go to `err` as `error:<kind>: message`.

#pragma once

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qet/config.hpp"
#include "qet/errors.hpp"
#include "qet/experiments.hpp"
#include "qet/io.hpp"
#include "qet/protocol.hpp"
#include "qet/redfield.hpp"
#include "qet/selfcheck.hpp"
#include "qet/system_model.hpp"

namespace qet {

inline int exit_code(ErrorKind kind) {
  if (is_numerical(kind)) return 3;
  if (kind == ErrorKind::Io) return 1;
  return 2;
}

namespace detail {

struct PointFlags {
  std::optional<std::string> config;
  std::optional<double> eps_a, eps_b, kappa;
  std::optional<std::string> statistics, stat_a, stat_b;
  std::optional<double> t, t_a, t_b, mu, mu_a, mu_b, gamma, gamma_a, gamma_b;
  std::optional<std::string> theta_policy, variant;
  std::optional<double> theta;

  void add_system(CLI::App* app) {
    app->add_option("--config", config, "JSON configuration file (flags override its values)");
    app->add_option("--eps-a", eps_a, "level splitting of qubit A");
    app->add_option("--eps-b", eps_b, "level splitting of qubit B");
    app->add_option("--kappa", kappa, "coupling strength");
  }

  void add_baths(CLI::App* app) {
    app->add_option("--statistics", statistics, "statistics of both baths (bose|fermi)");
    app->add_option("--stat-a", stat_a, "statistics of bath A");
    app->add_option("--stat-b", stat_b, "statistics of bath B");
    app->add_option("--T", t, "temperature of both baths");
    app->add_option("--T-a", t_a, "temperature of bath A");
    app->add_option("--T-b", t_b, "temperature of bath B");
    app->add_option("--mu", mu, "chemical potential of both baths");
    app->add_option("--mu-a", mu_a, "chemical potential of bath A");
    app->add_option("--mu-b", mu_b, "chemical potential of bath B");
    app->add_option("--gamma", gamma, "coupling rate of both baths");
    app->add_option("--gamma-a", gamma_a, "coupling rate of bath A");
    app->add_option("--gamma-b", gamma_b, "coupling rate of bath B");
    app->add_option("--theta-policy", theta_policy, "optimal|theta1|theta2|fixed");
    app->add_option("--theta", theta, "fixed measurement angle (implies --theta-policy fixed)");
    app->add_option("--variant", variant, "dissipator variant (paper|standard)");
  }

  /// defaults < file < flags
  RunConfig resolve() const {
    RunConfig c = config ? load_run_config(*config) : RunConfig{};
    if (eps_a) c.system.eps_a = *eps_a;
    if (eps_b) c.system.eps_b = *eps_b;
    if (kappa) c.system.kappa = *kappa;
    auto set = [](auto& field, const auto& both, const auto& one) {
      if (both) field = *both;
      if (one) field = *one;
    };
    for (int j = 0; j < 2; ++j) {
      auto& b = c.baths[j];
      const auto& stat = j == 0 ? stat_a : stat_b;
      if (statistics) b.statistics = parse_statistics(*statistics);
      if (stat) b.statistics = parse_statistics(*stat);
      set(b.temperature, t, j == 0 ? t_a : t_b);
      set(b.mu, mu, j == 0 ? mu_a : mu_b);
      set(b.gamma, gamma, j == 0 ? gamma_a : gamma_b);
    }
    if (theta) {
      c.policy.kind = ThetaPolicyKind::fixed;
      c.policy.theta = *theta;
    }
    if (theta_policy) c.policy.kind = parse_theta_policy(*theta_policy);
    if (variant) c.variant = parse_variant(*variant);
    c.validate();
    return c;
  }
};

inline std::string fixed6(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

inline void print_spectrum(const SystemParams& p, std::ostream& out) {
  const Spectrum s = analytic_spectrum(p);
  const TransitionSet t = transition_set(p);
  for (int k = 0; k < 4; ++k) out << 'E' << k + 1 << '=' << fixed6(s.energies(k)) << '\n';
  out << "phi1=" << fixed6(s.phi1) << '\n'
      << "phi2=" << fixed6(s.phi2) << '\n'
      << "eps_minus=" << fixed6(t.eps_minus) << '\n'
      << "eps_plus=" << fixed6(t.eps_plus) << '\n';
}

inline void print_point(const QetPoint& q, OutputFormat format, std::ostream& out, std::ostream& err) {
  const auto& s = q.steady;
  const auto& r = q.protocol;
  const std::vector<std::pair<std::string, double>> rows{
      {"p1", s.populations[0]}, {"p2", s.populations[1]}, {"p3", s.populations[2]},
      {"p4", s.populations[3]}, {"residual", s.residual}, {"min_eig", s.min_eigenvalue},
      {"gap_ratio", s.gap_ratio}, {"D", r.d_coef},       {"F", r.f_coef},
      {"theta1", r.theta1},     {"theta2", r.theta2},     {"theta_star", r.theta_star},
      {"e_out_theta1", r.e_out_theta1()}, {"e_out_theta2", r.e_out_theta2()}, {"e_out_max", r.e_max},
      {"theta", r.theta},       {"E0", r.e0},             {"EA", r.e_a},
      {"EB", r.e_b},            {"e_out", r.e_out},       {"injected", r.injected()}};
  if (format == OutputFormat::json) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : rows) j[k] = detail::round12(v);
    j["positivity_flagged"] = s.positivity_flagged;
    j["weak_coupling_warning"] = s.weak_coupling_warning;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& [k, v] : rows) out << std::left << std::setw(14) << k << format_number(v) << '\n';
  }
  if (s.positivity_flagged)
    err << "warning: steady state has a negative eigenvalue (" << format_number(s.min_eigenvalue) << ")\n";
  if (s.weak_coupling_warning) err << "warning: gamma exceeds 0.1 eps_minus; weak-coupling assumption is strained\n";
}

struct SweepFlags {
  std::optional<int> steps;
  unsigned threads = 0;
  std::optional<std::string> format;

  void add(CLI::App* app) {
    app->add_option("--steps", steps, "override the number of points on linspace axes")->check(CLI::Range(2, 100000));
    app->add_option("--threads", threads, "worker threads (default: QET_STEADY_THREADS or all cores)");
    app->add_option("--format", format, "csv|json");
  }
};

inline std::size_t count_skipped(const std::vector<SweepRecord>& records) {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const SweepRecord& r) { return r.skipped; }));
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steady-state quantum energy teleportation in a two-qubit open system", "qet-steady"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "show help for all subcommands");

  detail::PointFlags spectrum_flags;
  auto* spectrum = app.add_subcommand("spectrum", "analytic energies, mixing angles and transition frequencies");
  spectrum_flags.add_system(spectrum);

  detail::PointFlags eout_flags;
  std::string eout_format = "table";
  auto* eout = app.add_subcommand("eout", "steady state and protocol energetics at one parameter point");
  eout_flags.add_system(eout);
  eout_flags.add_baths(eout);
  eout->add_option("--format", eout_format, "table|json")->check(CLI::IsMember({"table", "json"}));

  detail::PointFlags eig_flags;
  int eig_steps = 101;
  std::string eig_out, eig_format = "csv";
  auto* eig = app.add_subcommand("eigenstate-eout", "energy output of the four eigenstates over a theta grid on [0,pi]");
  eig_flags.add_system(eig);
  eig->add_option("--steps", eig_steps, "theta grid points")->check(CLI::Range(2, 1000000));
  eig->add_option("--out", eig_out, "output file (default: standard output)");
  eig->add_option("--format", eig_format, "csv|json");

  std::string sweep_config, sweep_out;
  std::optional<std::string> sweep_variant, sweep_policy;
  detail::SweepFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "run a parameter sweep described by a configuration file");
  sweep->add_option("--config", sweep_config, "JSON configuration with a sweep block")->required();
  sweep->add_option("--out", sweep_out, "output file (overrides output.path)");
  sweep->add_option("--variant", sweep_variant, "dissipator variant (paper|standard)");
  sweep->add_option("--theta-policy", sweep_policy, "optimal|theta1|theta2|fixed");
  sweep_flags.add(sweep);

  std::string figure, reproduce_dir = ".";
  std::optional<std::string> reproduce_variant;
  detail::SweepFlags reproduce_flags;
  auto* reproduce = app.add_subcommand("reproduce", "run figure presets and write one file per panel");
  reproduce->add_option("--figure", figure, "preset id, or 'all'")->required();
  reproduce->add_option("--out", reproduce_dir, "output directory");
  reproduce->add_option("--variant", reproduce_variant, "dissipator variant (paper|standard)");
  reproduce_flags.add(reproduce);

  auto* presets = app.add_subcommand("presets", "list figure presets");

  std::uint64_t seed = 42;
  auto* selfcheck = app.add_subcommand("selfcheck", "run the oracle-equivalence suite");
  selfcheck->add_option("--seed", seed, "random seed");

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      for (auto* sub : app.get_subcommands())
        if (sub->get_help_ptr() && sub->get_help_ptr()->count()) {
          out << sub->help();
          return 0;
        }
      err << "error:config: " << e.what() << '\n';
      return 2;
    }

    if (*spectrum) {
      detail::print_spectrum(spectrum_flags.resolve().system, out);
    } else if (*eout) {
      const RunConfig c = eout_flags.resolve();
      detail::print_point(qet_at_steady_state(c.system, c.baths, c.policy, c.variant),
                          eout_format == "json" ? OutputFormat::json : OutputFormat::csv, out, err);
    } else if (*eig) {
      const RunConfig c = eig_flags.resolve();
      Scenario s = figure_preset("fig1");
      s.name = "eigenstate-eout";
      s.system = c.system;
      const auto rows = eigenstate_table(s, eig_steps);
      if (eig_out.empty())
        write_eigenstate_table(rows, parse_output_format(eig_format), out);
      else
        write_eigenstate_table(rows, parse_output_format(eig_format), eig_out);
    } else if (*sweep) {
      RunConfig c = load_run_config(sweep_config);
      if (sweep_variant) c.variant = parse_variant(*sweep_variant);
      if (sweep_policy) c.policy.kind = parse_theta_policy(*sweep_policy);
      if (!sweep_out.empty()) c.output.path = sweep_out;
      if (sweep_flags.format) c.output.format = parse_output_format(*sweep_flags.format);
      if (!c.sweep) throw Error(ErrorKind::Config, "'" + sweep_config + "' has no sweep block");
      c.validate();
      const auto records = run_sweep(c.scenario(), {sweep_flags.steps, sweep_flags.threads});
      if (c.output.path.empty() || c.output.path == "-") {
        write_records(records, c.output.format, out);
      } else {
        write_records(records, c.output.format, c.output.path);
        out << "wrote " << c.output.path << " (" << records.size() << " rows, " << detail::count_skipped(records)
            << " skipped)\n";
      }
    } else if (*reproduce) {
      const OutputFormat format = parse_output_format(reproduce_flags.format.value_or("csv"));
      const std::string ext = format == OutputFormat::csv ? ".csv" : ".json";
      std::vector<std::string> ids;
      if (figure == "all")
        ids = preset_ids();
      else
        ids.push_back(figure);
      std::vector<Scenario> scenarios;
      for (const auto& id : ids) scenarios.push_back(figure_preset(id));  // unknown ids fail before any work
      const auto start = std::chrono::steady_clock::now();
      for (auto& s : scenarios) {
        if (reproduce_variant) s.variant = parse_variant(*reproduce_variant);
        const std::string path = (std::filesystem::path(reproduce_dir) / (s.name + ext)).string();
        if (s.kind == ScenarioKind::eigenstate_table) {
          const auto rows = eigenstate_table(s, reproduce_flags.steps);
          write_eigenstate_table(rows, format, path);
          out << "wrote " << path << " (" << rows.size() << " rows)\n";
        } else {
          const auto records = run_sweep(s, {reproduce_flags.steps, reproduce_flags.threads});
          write_records(records, format, path);
          out << "wrote " << path << " (" << records.size() << " rows, " << detail::count_skipped(records)
              << " skipped)\n";
        }
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      out << "done in " << std::fixed << std::setprecision(2) << secs << " s\n";
    } else if (*presets) {
      for (const auto& id : preset_ids()) {
        const Scenario s = figure_preset(id);
        out << std::left << std::setw(24) << id << s.description << '\n';
      }
    } else if (*selfcheck) {
      const SelfcheckReport report = run_selfcheck(seed);
      report.print(out);
      if (!report.all_passed()) {
        err << "error:selfcheck: one or more checks failed\n";
        return 4;
      }
    }
    return 0;
  } catch (const Error& e) {
    err << "error:" << kind_name(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error:internal: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace qet
