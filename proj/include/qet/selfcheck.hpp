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

// Oracle-equivalence checks run by `qet-steady selfcheck`.

#pragma once

#include <cmath>
#include <array>
#include <cstdint>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qet/numerics.hpp"
#include "qet/protocol.hpp"
#include "qet/random.hpp"
#include "qet/redfield.hpp"
#include "qet/system_model.hpp"

namespace qet {

namespace oracle {

inline constexpr double kPropagationTmax = 1e7;
inline constexpr double kPropagationTol = 1e-11;

/// Long-time RK4 propagation of the Liouvillian from `rho0`.
inline DensityMatrix propagated_steady_state(const Superoperator& l, const DensityMatrix& rho0) {
  return integrate_generator(l, rho0, kPropagationTmax, kPropagationTol);
}

/// Gibbs populations exp(-E_k/T)/Z in ascending energy order.
inline std::array<double, 4> gibbs_populations(const SystemParams& p, double temperature) {
  const Spectrum s = analytic_spectrum(p);
  std::array<double, 4> w{};
  double z = 0.0;
  for (int k = 0; k < 4; ++k) z += w[k] = std::exp(-(s.energies(k) - s.energies(0)) / temperature);
  for (double& x : w) x /= z;
  return w;
}

/// Largest |tr L(E_ij)| over the 16 matrix units.
inline double trace_preservation_defect(const Superoperator& l) {
  double worst = 0.0;
  for (int k = 0; k < 16; ++k) {
    const Operator out = unstack(l.col(k));
    worst = std::max(worst, std::abs(out.trace()));
  }
  return worst;
}

/// Largest anti-Hermitian part of L(X) over the Hermitian basis {E_ii, E_ij+E_ji, i(E_ij-E_ji)}.
inline double hermiticity_preservation_defect(const Superoperator& l) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      std::vector<Operator> basis;
      Operator a = Operator::Zero();
      a(i, j) = 1.0;
      a(j, i) = 1.0;
      basis.push_back(a);
      if (i != j) {
        Operator b = Operator::Zero();
        b(i, j) = kI;
        b(j, i) = -kI;
        basis.push_back(b);
      }
      for (const auto& x : basis) worst = std::max(worst, hermiticity_defect(unstack(l * stack(x))));
    }
  return worst;
}

}  // namespace oracle

struct CheckLine {
  enum class Status { pass, fail, info };
  Status status = Status::pass;
  std::string name;
  std::string detail;
};

struct SelfcheckReport {
  std::vector<CheckLine> lines;

  bool all_passed() const {
    for (const auto& l : lines)
      if (l.status == CheckLine::Status::fail) return false;
    return true;
  }

  void print(std::ostream& os) const {
    for (const auto& l : lines) {
      const char* tag = l.status == CheckLine::Status::pass ? "PASS" : l.status == CheckLine::Status::fail ? "FAIL" : "INFO";
      os << tag << "  " << l.name << ": " << l.detail << '\n';
    }
  }
};

namespace detail {

inline std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

inline void record(SelfcheckReport& r, const std::string& name, double value, double tol, const std::string& what) {
  r.lines.push_back({value < tol ? CheckLine::Status::pass : CheckLine::Status::fail, name,
                     what + " = " + sci(value) + " (tol " + sci(tol) + ")"});
}

inline std::vector<std::pair<SystemParams, BathPair>> selfcheck_configurations() {
  const ReservoirSpec bose1{Statistics::bose, 1.0, 0.0, 0.05};
  return {
      {{2.0, 2.0, 1.0}, {bose1, bose1}},
      {{2.0, 2.0, 1.0}, {ReservoirSpec{Statistics::bose, 1.5, 0.0, 0.05}, ReservoirSpec{Statistics::bose, 0.5, 0.0, 0.05}}},
      {{2.9, 1.1, 1.0}, {ReservoirSpec{Statistics::fermi, 0.5, 3.0, 0.05}, ReservoirSpec{Statistics::fermi, 0.5, -1.0, 0.05}}},
      {{1.0, 1.0, 1.0}, {ReservoirSpec{Statistics::fermi, 1.0, 8.0, 0.05}, ReservoirSpec{Statistics::fermi, 1.0, 8.0, 0.05}}},
  };
}

}  // namespace detail

inline SelfcheckReport run_selfcheck(std::uint64_t seed = 42) {
  SelfcheckReport report;
  random::Engine rng(seed);

  {  // closed form vs direct protocol simulation
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const SystemParams p = i % 2 == 0 ? SystemParams{2.0, 2.0, 1.0} : random::system_params(rng);
      const DensityMatrix rho = random::density_matrix(rng);
      const double theta = random::uniform(rng, 0.0, std::numbers::pi);
      const double closed = energy_output(protocol_coefficients(rho, p), theta);
      worst = std::max(worst, std::abs(closed - simulate_protocol(rho, theta, p).e_out));
    }
    detail::record(report, "closed_form_vs_simulation", worst, 1e-10, "max |D sin2t - F(1-cos2t) - E_out| over 1000 states");
  }

  {  // eigenstate closed forms vs simulation
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const SystemParams p = random::system_params(rng);
      const Spectrum s = analytic_spectrum(p);
      for (int k = 1; k <= 4; ++k) {
        const Eigen::Vector4cd ket = s.eigenbasis.col(k - 1);
        const DensityMatrix rho(Operator(ket * ket.adjoint()));
        for (int j = 0; j < 10; ++j) {
          const double theta = random::uniform(rng, 0.0, std::numbers::pi);
          worst = std::max(worst, std::abs(eigenstate_eout(p, k, theta) - simulate_protocol(rho, theta, p).e_out));
        }
      }
    }
    detail::record(report, "eigenstate_closed_form", worst, 1e-10, "max deviation over 20 parameter sets");
  }

  {  // generator sanity
    double trace = 0.0, herm = 0.0;
    for (const auto& [p, baths] : detail::selfcheck_configurations())
      for (auto v : {DissipatorVariant::paper, DissipatorVariant::standard}) {
        const Superoperator l = build_liouvillian(p, baths, v);
        trace = std::max(trace, oracle::trace_preservation_defect(l));
        herm = std::max(herm, oracle::hermiticity_preservation_defect(l));
      }
    detail::record(report, "trace_preservation", trace, 1e-12, "max |tr L(E_ij)|");
    detail::record(report, "hermiticity_preservation", herm, 1e-12, "max anti-Hermitian part of L(X)");
  }

  {  // null space vs long-time propagation
    double worst = 0.0, min_gap = std::numeric_limits<double>::infinity();
    for (const auto& [p, baths] : detail::selfcheck_configurations()) {
      const Superoperator l = build_liouvillian(p, baths);
      const SteadyStateResult ss = steady_state(p, baths);
      min_gap = std::min(min_gap, ss.gap_ratio);
      for (int i = 0; i < 3; ++i) {
        const DensityMatrix rho0 = i == 0 ? DensityMatrix::maximally_mixed() : random::density_matrix(rng);
        const DensityMatrix prop = oracle::propagated_steady_state(l, rho0);
        worst = std::max(worst, max_abs_entry(prop.matrix() - ss.rho_local.matrix()));
      }
    }
    detail::record(report, "null_space_vs_propagation", worst, 1e-6, "max entrywise difference");
    report.lines.push_back({min_gap > 1e3 ? CheckLine::Status::pass : CheckLine::Status::fail, "kernel_gap",
                            "min gap ratio = " + detail::sci(min_gap) + " (need > 1e3)"});
  }

  {  // thermalization
    const SystemParams p{2.0, 2.0, 1.0};
    const ReservoirSpec bath{Statistics::bose, 1.0, 0.0, 0.05};
    const auto ss = steady_state(p, {bath, bath});
    const auto gibbs = oracle::gibbs_populations(p, 1.0);
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(ss.populations[k] - gibbs[k]));
    detail::record(report, "gibbs_equilibrium", worst, 2e-3, "max |p_k - Gibbs_k| at T=1, eps=2, kappa=1");
  }

  {  // diagnostics: printed formulas that disagree with the simulation
    XStateParams x{0.4, 0.2, 0.15, 0.25, 0.2, 0.1, 0.3, -0.4};
    const SystemParams p{2.0, 2.0, 1.0};
    const double sim = simulate_protocol(x.matrix(), 0.7, p).e_out;
    const double with2 = energy_output(x_state_coefficients(x, p), 0.7);
    const double printed = energy_output(x_state_coefficients_as_printed(x, p), 0.7);
    report.lines.push_back({CheckLine::Status::info, "x_state_D_printed_form",
                            "simulation " + detail::sci(sim) + ", D with factor 2 " + detail::sci(with2) +
                                ", D without factor 2 " + detail::sci(printed)});

    const double ground_emax = optimal_angles(protocol_coefficients(
                                                  [&] {
                                                    const Eigen::Vector4cd g = analytic_spectrum(p).eigenbasis.col(0);
                                                    return DensityMatrix(Operator(g * g.adjoint()));
                                                  }(),
                                                  p))
                                   .e_max;
    const double quoted = 4.0 * p.kappa * p.kappa / std::sqrt(4.0 * p.eps_a * p.eps_a + 4.0 * p.kappa * p.kappa);
    report.lines.push_back({CheckLine::Status::info, "ground_state_emax_quoted_form",
                            "E_max " + detail::sci(ground_emax) + " vs 4k^2/sqrt(4eps^2+4k^2) = " + detail::sci(quoted)});
  }
  return report;
}

}  // namespace qet
