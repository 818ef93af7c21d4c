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

// Three-step energy teleportation protocol: Alice measures sx on A with
// outcome u, sends u, Bob applies U_B(u) = cos(theta) - i u sin(theta) sy_B.
//
// Two routes to the energy output:
//  - simulate_protocol: explicit 4x4 operator algebra (the oracle);
//  - protocol_coefficients + energy_output: E_out = D sin2t - F (1 - cos2t).

#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "qet/errors.hpp"
#include "qet/numerics.hpp"
#include "qet/system_model.hpp"

namespace qet {

/// Eigenvalue slack accepted on protocol inputs (Redfield states are not
/// exactly positive).
inline constexpr double kPositivitySlack = 1e-4;

inline void validate_state(const DensityMatrix& rho) {
  if (min_eigenvalue(rho) < -kPositivitySlack)
    throw Error(ErrorKind::InvalidState, "density matrix has a negative eigenvalue beyond tolerance");
}

struct ProtocolOperators {
  Operator projector;  // P_A(u) = (I + u sx_A)/2
  Operator unitary;    // U_B(u)
};

inline ProtocolOperators protocol_operators(int outcome, double theta) {
  if (outcome != 1 && outcome != -1) throw Error(ErrorKind::InvalidOutcome, "measurement outcome must be +1 or -1");
  const double u = outcome;
  ProtocolOperators ops;
  ops.projector = 0.5 * (Operator::Identity() + u * pauli::on_a(pauli::x()));
  ops.unitary = std::cos(theta) * Operator::Identity() - kI * (u * std::sin(theta)) * pauli::on_b(pauli::y());
  return ops;
}

struct ProtocolEnergies {
  double e0 = 0.0;   // Tr(H rho)
  double e_a = 0.0;  // after Alice's measurement
  double e_b = 0.0;  // after Bob's correction
  double e_out = 0.0;

  double injected() const { return e_a - e0; }
};

inline ProtocolEnergies simulate_protocol(const DensityMatrix& rho, double theta, const SystemParams& p) {
  validate_state(rho);
  const Operator h = build_hamiltonian(p);
  ProtocolEnergies out;
  out.e0 = (h * rho.matrix()).trace().real();
  for (int u : {1, -1}) {
    const auto ops = protocol_operators(u, theta);
    const Operator measured = ops.projector * rho.matrix() * ops.projector.adjoint();
    const Operator corrected = ops.unitary * measured * ops.unitary.adjoint();
    out.e_a += (h * measured).trace().real();
    out.e_b += (h * corrected).trace().real();
  }
  out.e_out = out.e_a - out.e_b;
  return out;
}

struct Coefficients {
  double d = 0.0;
  double f = 0.0;
};

inline double energy_output(const Coefficients& c, double theta) {
  return c.d * std::sin(2.0 * theta) - c.f * (1.0 - std::cos(2.0 * theta));
}

/// D and F from <sz_B> and <sx_A sx_B>; valid for any state, not only X states.
inline Coefficients protocol_coefficients(const DensityMatrix& rho, const SystemParams& p) {
  validate_state(rho);
  p.validate();
  const double z_b = (rho.matrix() * pauli::on_b(pauli::z())).trace().real();
  const double xx = (rho.matrix() * pauli::kron(pauli::x(), pauli::x())).trace().real();
  return {-2.0 * p.kappa * z_b + p.eps_b * xx, -(p.eps_b * z_b + 2.0 * p.kappa * xx)};
}

inline double injected_energy(const DensityMatrix& rho, const SystemParams& p) {
  validate_state(rho);
  p.validate();
  return -p.eps_a * (rho.matrix() * pauli::on_a(pauli::z())).trace().real();
}

struct OptimalAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta_star = 0.0;
  double e_max = 0.0;
};

/// Stationary angles of E_out in [0, pi). theta1 solves tan(2 theta1) = D/F on
/// the principal branch, so it is the maximizer only when F > 0; theta2 is the
/// other stationary point. D = F = 0 gives theta1 = 0, theta2 = pi/2.
inline OptimalAngles optimal_angles(const Coefficients& c) {
  constexpr double pi = std::numbers::pi;
  OptimalAngles a;
  if (c.d == 0.0 && c.f == 0.0) {
    a.theta1 = 0.0;
    a.theta2 = pi / 2.0;
    a.theta_star = a.theta1;
    a.e_max = 0.0;
    return a;
  }
  const double two_theta = c.f != 0.0 ? std::atan(c.d / c.f) : std::copysign(pi / 2.0, c.d);
  auto wrap = [](double t) {
    double w = std::fmod(t, pi);
    if (w < 0.0) w += pi;
    return w >= pi ? 0.0 : w;
  };
  a.theta1 = wrap(0.5 * two_theta);
  a.theta2 = wrap(a.theta1 + pi / 2.0);
  a.theta_star = energy_output(c, a.theta2) > energy_output(c, a.theta1) ? a.theta2 : a.theta1;
  a.e_max = std::hypot(c.d, c.f) - c.f;
  return a;
}

/// Closed-form E_out of the eigenstate |E_k>, k = 1..4.
inline double eigenstate_eout(const SystemParams& p, int k, double theta) {
  if (k < 1 || k > 4) throw Error(ErrorKind::InvalidIndex, "eigenstate index must be in 1..4");
  p.validate();
  const double r1 = std::hypot(p.omega(), 2.0 * p.kappa);
  const double r2 = std::hypot(p.detuning(), 2.0 * p.kappa);
  const double k2 = 4.0 * p.kappa * p.kappa;
  const double s = std::sin(2.0 * theta);
  const double one_minus_c = 1.0 - std::cos(2.0 * theta);
  const double sign = (k == 1 || k == 2) ? 1.0 : -1.0;
  if (k == 1 || k == 4)
    return sign * (2.0 * p.eps_a * p.kappa * s - (p.eps_b * p.omega() + k2) * one_minus_c) / r1;
  return sign * (-2.0 * p.eps_a * p.kappa * s + (p.eps_b * p.detuning() - k2) * one_minus_c) / r2;
}

enum class ThetaPolicyKind { optimal, theta1, theta2, fixed };

struct ThetaPolicy {
  ThetaPolicyKind kind = ThetaPolicyKind::optimal;
  double theta = 0.0;  // used by `fixed`

  static ThetaPolicy optimal() { return {}; }
  static ThetaPolicy fixed(double t) { return {ThetaPolicyKind::fixed, t}; }

  double select(const OptimalAngles& a) const {
    switch (kind) {
      case ThetaPolicyKind::optimal: return a.theta_star;
      case ThetaPolicyKind::theta1: return a.theta1;
      case ThetaPolicyKind::theta2: return a.theta2;
      case ThetaPolicyKind::fixed: return theta;
    }
    return a.theta_star;
  }
};

struct ProtocolResult {
  // energies at the policy-selected angle `theta`
  double e0 = 0.0;
  double e_a = 0.0;
  double e_b = 0.0;
  double e_out = 0.0;
  double theta = 0.0;

  double d_coef = 0.0;
  double f_coef = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta_star = 0.0;
  double e_max = 0.0;

  double injected() const { return e_a - e0; }
  double e_out_theta1() const { return energy_output({d_coef, f_coef}, theta1); }
  double e_out_theta2() const { return energy_output({d_coef, f_coef}, theta2); }
};

inline ProtocolResult evaluate_protocol(const DensityMatrix& rho, const SystemParams& p, const ThetaPolicy& policy) {
  const Coefficients c = protocol_coefficients(rho, p);
  const OptimalAngles a = optimal_angles(c);
  ProtocolResult r;
  r.d_coef = c.d;
  r.f_coef = c.f;
  r.theta1 = a.theta1;
  r.theta2 = a.theta2;
  r.theta_star = a.theta_star;
  r.e_max = a.e_max;
  r.theta = policy.select(a);
  const ProtocolEnergies e = simulate_protocol(rho, r.theta, p);
  r.e0 = e.e0;
  r.e_a = e.e_a;
  r.e_b = e.e_b;
  r.e_out = e.e_out;
  return r;
}

// ---- X states ---------------------------------------------------------------

struct XStateParams {
  double a = 0.25, b = 0.25, c = 0.25, d = 0.25;  // populations of ee, eg, ge, gg
  double alpha = 0.0;                             // |rho_(ee,gg)|
  double delta = 0.0;                             // |rho_(eg,ge)|
  double beta = 0.0;                              // phase of rho_(ee,gg)
  double eps_phase = 0.0;                         // phase of rho_(eg,ge)

  void validate() const {
    constexpr double tol = 1e-12;
    if (std::abs(a + b + c + d - 1.0) > tol) throw Error(ErrorKind::InvalidState, "X state populations must sum to 1");
    if (a < -tol || b < -tol || c < -tol || d < -tol)
      throw Error(ErrorKind::InvalidState, "X state populations must be nonnegative");
    if (alpha < 0.0 || delta < 0.0) throw Error(ErrorKind::InvalidState, "X state coherence magnitudes must be nonnegative");
    if (alpha * alpha > a * d + tol || delta * delta > b * c + tol)
      throw Error(ErrorKind::InvalidState, "X state violates positivity");
  }

  DensityMatrix matrix() const {
    validate();
    Operator m = Operator::Zero();
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    m(3, 3) = d;
    m(0, 3) = std::polar(alpha, beta);
    m(3, 0) = std::conj(m(0, 3));
    m(1, 2) = std::polar(delta, eps_phase);
    m(2, 1) = std::conj(m(1, 2));
    return DensityMatrix(m);
  }

  double coherence() const { return delta * std::cos(eps_phase) + alpha * std::cos(beta); }
};

inline Coefficients x_state_coefficients(const XStateParams& x, const SystemParams& p) {
  x.validate();
  const double z_b = x.a - x.b + x.c - x.d;
  return {-2.0 * z_b * p.kappa + 2.0 * p.eps_b * x.coherence(), -z_b * p.eps_b - 4.0 * p.kappa * x.coherence()};
}

/// D as printed in the source derivation, without the factor 2 on the
/// coherence term. Diagnostic only; disagrees with simulate_protocol.
inline Coefficients x_state_coefficients_as_printed(const XStateParams& x, const SystemParams& p) {
  Coefficients c = x_state_coefficients(x, p);
  c.d -= p.eps_b * x.coherence();
  return c;
}

}  // namespace qet
