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

// Two-qubit Hamiltonian  H = eps_a sz(x)I + eps_b I(x)sz + 2 kappa sx(x)sx,
// its closed-form spectrum and the eigenbasis transition operators.
//
// Local basis order is (|ee>, |eg>, |ge>, |gg>) with qubit A first and
// sz|e> = +|e>. Eigenbasis order is E1 <= E2 <= E3 <= E4.

#pragma once

#include <cmath>
#include <sstream>

#include "qet/errors.hpp"
#include "qet/numerics.hpp"

namespace qet {

using Qubit = Eigen::Matrix<Complex, 2, 2>;

namespace pauli {

inline Qubit identity() { return Qubit::Identity(); }

inline Qubit x() {
  Qubit m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

inline Qubit y() {
  Qubit m;
  m << 0.0, -kI, kI, 0.0;
  return m;
}

inline Qubit z() {
  Qubit m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

/// |g><e|
inline Qubit lowering() {
  Qubit m;
  m << 0.0, 0.0, 1.0, 0.0;
  return m;
}

inline Operator kron(const Qubit& a, const Qubit& b) {
  Operator m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return m;
}

inline Operator on_a(const Qubit& op) { return kron(op, identity()); }
inline Operator on_b(const Qubit& op) { return kron(identity(), op); }

}  // namespace pauli

struct SystemParams {
  double eps_a = 2.0;
  double eps_b = 2.0;
  double kappa = 1.0;

  double omega() const { return eps_a + eps_b; }
  double detuning() const { return eps_a - eps_b; }

  void validate() const {
    std::ostringstream why;
    if (!std::isfinite(eps_a) || !std::isfinite(eps_b) || !std::isfinite(kappa))
      why << "non-finite system parameter";
    else if (!(eps_a > 0.0))
      why << "eps_a must be positive (got " << eps_a << ")";
    else if (!(eps_b > 0.0))
      why << "eps_b must be positive (got " << eps_b << ")";
    else if (kappa == 0.0)
      why << "kappa must be nonzero";
    if (!why.str().empty()) throw Error(ErrorKind::InvalidParams, why.str());
  }
};

inline Operator build_hamiltonian(const SystemParams& p) {
  p.validate();
  return p.eps_a * pauli::on_a(pauli::z()) + p.eps_b * pauli::on_b(pauli::z()) +
         2.0 * p.kappa * pauli::kron(pauli::x(), pauli::x());
}

struct Spectrum {
  Eigen::Vector4d energies;
  double phi1 = 0.0;
  double phi2 = 0.0;
  Operator eigenbasis;  // columns |E1>..|E4> in the local basis
};

namespace detail {

// arctan(2k / (x + sqrt(x^2 + 4k^2))), rewritten for x < 0 to avoid cancellation.
inline double mixing_angle(double x, double kappa) {
  const double r = std::hypot(x, 2.0 * kappa);
  if (x >= 0.0) return std::atan(2.0 * kappa / (x + r));
  return std::atan((r - x) / (2.0 * kappa));
}

}  // namespace detail

inline Spectrum analytic_spectrum(const SystemParams& p) {
  p.validate();
  const double r1 = std::hypot(p.omega(), 2.0 * p.kappa);
  const double r2 = std::hypot(p.detuning(), 2.0 * p.kappa);

  Spectrum s;
  s.energies << -r1, -r2, r2, r1;
  s.phi1 = detail::mixing_angle(p.omega(), p.kappa);
  s.phi2 = detail::mixing_angle(p.detuning(), p.kappa);

  const double s1 = std::sin(s.phi1), c1 = std::cos(s.phi1);
  const double s2 = std::sin(s.phi2), c2 = std::cos(s.phi2);
  constexpr int ee = 0, eg = 1, ge = 2, gg = 3;
  s.eigenbasis.setZero();
  s.eigenbasis(ee, 0) = -s1;
  s.eigenbasis(gg, 0) = c1;
  s.eigenbasis(eg, 1) = -s2;
  s.eigenbasis(ge, 1) = c2;
  s.eigenbasis(eg, 2) = c2;
  s.eigenbasis(ge, 2) = s2;
  s.eigenbasis(ee, 3) = c1;
  s.eigenbasis(gg, 3) = s1;
  return s;
}

enum class Basis { local, eigen };

struct TransitionSet {
  Operator eta_a, eta_b, xi_a, xi_b;
  double eps_minus = 0.0;  // |E2> -> |E1>, |E4> -> |E3>
  double eps_plus = 0.0;   // |E3> -> |E1>, |E4> -> |E2>
  Basis basis = Basis::eigen;

  TransitionSet in_local_basis(const Spectrum& s) const {
    if (basis == Basis::local) return *this;
    const Operator& v = s.eigenbasis;
    TransitionSet t = *this;
    t.eta_a = v * eta_a * v.adjoint();
    t.eta_b = v * eta_b * v.adjoint();
    t.xi_a = v * xi_a * v.adjoint();
    t.xi_b = v * xi_b * v.adjoint();
    t.basis = Basis::local;
    return t;
  }
};

/// eta_j lowers across eps_minus, xi_j across eps_plus; eta_j + xi_j is the
/// energy-lowering part of sx_j in the eigenbasis.
inline TransitionSet transition_set(const SystemParams& p) {
  const Spectrum s = analytic_spectrum(p);
  auto ket_bra = [](int m, int n) {
    Operator op = Operator::Zero();
    op(m, n) = 1.0;
    return op;
  };
  const Operator e34 = ket_bra(2, 3), e12 = ket_bra(0, 1);
  const Operator e24 = ket_bra(1, 3), e13 = ket_bra(0, 2);

  TransitionSet t;
  t.eta_a = std::sin(s.phi1 + s.phi2) * (e34 - e12);
  t.eta_b = std::cos(s.phi1 - s.phi2) * (e34 + e12);
  t.xi_a = std::cos(s.phi1 + s.phi2) * (e24 + e13);
  t.xi_b = std::sin(s.phi1 - s.phi2) * (e24 - e13);
  t.eps_minus = s.energies(3) - s.energies(2);
  t.eps_plus = s.energies(3) - s.energies(1);
  t.basis = Basis::eigen;
  return t;
}

enum class Direction { local_to_eigen, eigen_to_local };

inline DensityMatrix basis_transform(const DensityMatrix& rho, const Spectrum& s, Direction direction) {
  const Operator& v = s.eigenbasis;
  if (direction == Direction::local_to_eigen) return DensityMatrix(Operator(v.adjoint() * rho.matrix() * v));
  return DensityMatrix(Operator(v * rho.matrix() * v.adjoint()));
}

}  // namespace qet
