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

// Non-secular Bloch-Redfield generator for two qubits, each coupled to its own
// bosonic or fermionic reservoir with a flat coupling spectrum.

#pragma once

#include <array>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "qet/errors.hpp"
#include "qet/numerics.hpp"
#include "qet/protocol.hpp"
#include "qet/system_model.hpp"

namespace qet {

enum class Statistics { bose, fermi };

struct ReservoirSpec {
  Statistics statistics = Statistics::bose;
  double temperature = 1.0;  // k_B = 1
  double mu = 0.0;
  double gamma = 0.05;

  void validate() const {
    std::ostringstream why;
    if (!(temperature > 0.0) || !std::isfinite(temperature))
      why << "temperature must be positive and finite (got " << temperature << ")";
    else if (!std::isfinite(mu))
      why << "chemical potential must be finite";
    else if (!(gamma >= 0.0) || !std::isfinite(gamma))
      why << "gamma must be nonnegative and finite (got " << gamma << ")";
    else if (statistics == Statistics::bose && mu != 0.0)
      why << "bosonic reservoirs have zero chemical potential (got " << mu << ")";
    if (!why.str().empty()) throw Error(ErrorKind::InvalidParams, why.str());
  }
};

using BathPair = std::array<ReservoirSpec, 2>;  // {bath on A, bath on B}

inline double occupation(const ReservoirSpec& spec, double omega) {
  if (!(omega > 0.0)) throw Error(ErrorKind::NonPositiveFrequency, "occupation: transition frequency must be positive");
  const double x = (omega - spec.mu) / spec.temperature;
  if (spec.statistics == Statistics::bose) return 1.0 / std::expm1(x);
  return 1.0 / (std::exp(x) + 1.0);
}

struct Rates {
  double alpha = 0.0;  // absorption, gamma n
  double beta = 0.0;   // emission, gamma (1 +- n)
};

inline Rates rates(const ReservoirSpec& spec, double omega) {
  const double n = occupation(spec, omega);
  const double sign = spec.statistics == Statistics::bose ? 1.0 : -1.0;
  return {spec.gamma * n, spec.gamma * (1.0 + sign * n)};
}

enum class DissipatorVariant {
  paper,     // the printed four-rate term list, verbatim, plus H.c.
  standard,  // Bloch-Redfield double sum over (eta, eps_-), (xi, eps_+), plus H.c.
};

enum class DissipatorTerms { all, secular, cross };

namespace detail {

struct SandwichTerm {
  double rate;
  Operator left;
  Operator right;
  bool secular;
};

inline void add_terms(Superoperator& out, const std::vector<SandwichTerm>& terms, DissipatorTerms which) {
  for (const auto& t : terms) {
    if (which == DissipatorTerms::secular && !t.secular) continue;
    if (which == DissipatorTerms::cross && t.secular) continue;
    // t.rate * L rho R  plus its Hermitian conjugate  t.rate * R^dag rho L^dag
    out += t.rate * superoperator_embed(t.left, t.right);
    out += t.rate * superoperator_embed(t.right.adjoint(), t.left.adjoint());
  }
}

inline std::vector<SandwichTerm> paper_terms(const Operator& eta, const Operator& xi, Rates minus, Rates plus) {
  const Operator id = Operator::Identity();
  const Operator eta_d = eta.adjoint(), xi_d = xi.adjoint();
  return {
      {minus.alpha, eta_d, eta, true},         {minus.alpha, eta_d, xi, false},
      {-minus.alpha, eta * eta_d, id, true},   {-minus.alpha, xi * eta_d, id, false},
      {plus.alpha, xi_d, xi, true},            {plus.alpha, eta_d, xi, false},
      {-plus.alpha, xi * xi_d, id, true},      {-plus.alpha, eta * xi_d, id, false},
      {minus.beta, eta, eta_d, true},          {minus.beta, eta, xi_d, false},
      {-minus.beta, eta_d * eta, id, true},    {-minus.beta, xi_d * eta, id, false},
      {plus.beta, xi, xi_d, true},             {plus.beta, eta, xi_d, false},
      {-plus.beta, xi_d * xi, id, true},       {-plus.beta, eta_d * xi, id, false},
  };
}

inline std::vector<SandwichTerm> standard_terms(const Operator& eta, const Operator& xi, Rates minus, Rates plus) {
  const Operator id = Operator::Identity();
  struct Channel {
    const Operator* op;
    Rates r;
  };
  const std::array<Channel, 2> channels{{{&eta, minus}, {&xi, plus}}};
  std::vector<SandwichTerm> terms;
  for (std::size_t ix = 0; ix < 2; ++ix) {
    for (std::size_t iy = 0; iy < 2; ++iy) {
      const Operator& x = *channels[ix].op;
      const Operator& y = *channels[iy].op;
      const Rates& r = channels[ix].r;
      const bool secular = ix == iy;
      terms.push_back({r.alpha, x.adjoint(), y, secular});
      terms.push_back({-r.alpha, y * x.adjoint(), id, secular});
      terms.push_back({r.beta, x, y.adjoint(), secular});
      terms.push_back({-r.beta, y.adjoint() * x, id, secular});
    }
  }
  return terms;
}

}  // namespace detail

/// Dissipator superoperator in the local basis.
inline Superoperator build_dissipator(const SystemParams& p, const BathPair& baths, DissipatorVariant variant,
                                      DissipatorTerms which = DissipatorTerms::all) {
  p.validate();
  for (const auto& b : baths) b.validate();
  const Spectrum s = analytic_spectrum(p);
  const TransitionSet t = transition_set(p).in_local_basis(s);

  Superoperator d = Superoperator::Zero();
  const std::array<const Operator*, 2> etas{&t.eta_a, &t.eta_b};
  const std::array<const Operator*, 2> xis{&t.xi_a, &t.xi_b};
  for (std::size_t j = 0; j < 2; ++j) {
    if (baths[j].gamma == 0.0) continue;
    const Rates minus = rates(baths[j], t.eps_minus);
    const Rates plus = rates(baths[j], t.eps_plus);
    const auto terms = variant == DissipatorVariant::paper ? detail::paper_terms(*etas[j], *xis[j], minus, plus)
                                                           : detail::standard_terms(*etas[j], *xis[j], minus, plus);
    detail::add_terms(d, terms, which);
  }
  return d;
}

inline Superoperator build_liouvillian(const SystemParams& p, const BathPair& baths,
                                       DissipatorVariant variant = DissipatorVariant::paper) {
  const Operator h = build_hamiltonian(p);
  const Operator id = Operator::Identity();
  return -kI * superoperator_embed(h, id) + kI * superoperator_embed(id, h) + build_dissipator(p, baths, variant);
}

/// Largest entry outside the diagonal and anti-diagonal.
inline double off_x_magnitude(const Operator& m) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && i + j != 3) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

struct SteadyStateResult {
  DensityMatrix rho_local;
  DensityMatrix rho_eigen;
  std::array<double, 4> populations{};  // eigenbasis diagonal, E1..E4
  double residual = 0.0;
  double min_eigenvalue = 0.0;
  double gap_ratio = 0.0;
  double off_x = 0.0;
  bool positivity_flagged = false;     // min_eigenvalue < -1e-6
  bool weak_coupling_warning = false;  // some gamma > 0.1 eps_minus
};

inline SteadyStateResult steady_state(const SystemParams& p, const BathPair& baths,
                                      DissipatorVariant variant = DissipatorVariant::paper) {
  const Superoperator l = build_liouvillian(p, baths, variant);
  const NullVectorResult kernel = null_vector(l);
  const Spectrum s = analytic_spectrum(p);

  SteadyStateResult r;
  r.rho_local = DensityMatrix::normalized(unstack(kernel.vector));
  r.rho_eigen = DensityMatrix::normalized(s.eigenbasis.adjoint() * r.rho_local.matrix() * s.eigenbasis);
  for (int k = 0; k < 4; ++k) r.populations[k] = r.rho_eigen.matrix()(k, k).real();
  r.residual = kernel.residual;
  r.gap_ratio = kernel.gap_ratio;
  r.min_eigenvalue = min_eigenvalue(r.rho_local);
  r.off_x = off_x_magnitude(r.rho_eigen.matrix());
  if (r.off_x > 1e-6)
    throw Error(ErrorKind::NotXForm, "steady state is not X-shaped (off-X magnitude " + std::to_string(r.off_x) + ")");
  r.positivity_flagged = r.min_eigenvalue < -1e-6;
  const double eps_minus = s.energies(3) - s.energies(2);
  for (const auto& b : baths) r.weak_coupling_warning = r.weak_coupling_warning || b.gamma > 0.1 * eps_minus;
  return r;
}

struct QetPoint {
  SteadyStateResult steady;
  ProtocolResult protocol;
};

inline QetPoint qet_at_steady_state(const SystemParams& p, const BathPair& baths, const ThetaPolicy& policy,
                                    DissipatorVariant variant = DissipatorVariant::paper) {
  QetPoint out{steady_state(p, baths, variant), {}};
  out.protocol = evaluate_protocol(out.steady.rho_local, p, policy);
  return out;
}

}  // namespace qet
