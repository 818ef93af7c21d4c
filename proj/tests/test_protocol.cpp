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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qet/protocol.hpp"
#include "qet/random.hpp"

namespace qet {
namespace {

constexpr double pi = std::numbers::pi;
const SystemParams kRef{2.0, 2.0, 1.0};

DensityMatrix eigenprojector(const SystemParams& p, int k) {
  const Eigen::Vector4cd v = analytic_spectrum(p).eigenbasis.col(k - 1);
  return DensityMatrix(Operator(v * v.adjoint()));
}

DensityMatrix basis_state(int index) {
  Operator m = Operator::Zero();
  m(index, index) = 1.0;
  return DensityMatrix(m);
}

TEST(ProtocolOperators, ZeroAngleIsIdentity) {
  for (int u : {1, -1}) EXPECT_EQ(protocol_operators(u, 0.0).unitary, Operator::Identity());
}

TEST(ProtocolOperators, ProjectorAndUnitaryProperties) {
  random::Engine rng(30);
  const Operator p_plus = protocol_operators(1, 0.0).projector;
  const Operator p_minus = protocol_operators(-1, 0.0).projector;
  EXPECT_LT(max_abs_entry(p_plus + p_minus - Operator::Identity()), 1e-15);
  for (const Operator& p : {p_plus, p_minus}) {
    EXPECT_LT(max_abs_entry(p * p - p), 1e-15);
    EXPECT_EQ(hermiticity_defect(p), 0.0);
    EXPECT_NEAR(p.trace().real(), 2.0, 1e-15);
  }
  for (int i = 0; i < 100; ++i) {
    const double theta = random::uniform(rng, -10.0, 10.0);
    for (int u : {1, -1}) {
      const Operator w = protocol_operators(u, theta).unitary;
      EXPECT_LT(max_abs_entry(w * w.adjoint() - Operator::Identity()), 1e-14);
      // acts on qubit B only
      const Qubit b = w.block<2, 2>(0, 0);
      EXPECT_LT(max_abs_entry(w - pauli::on_b(b)), 1e-15);
    }
  }
}

TEST(ProtocolOperators, CommutesWithLocalHamiltonianOfBAndInteraction) {
  const Operator h_b = pauli::on_b(pauli::z()) * 2.0;
  const Operator v = 2.0 * pauli::kron(pauli::x(), pauli::x());
  for (int u : {1, -1}) {
    const Operator p = protocol_operators(u, 0.3).projector;
    EXPECT_LT(max_abs_entry(p * h_b - h_b * p), 1e-15);
    EXPECT_LT(max_abs_entry(p * v - v * p), 1e-15);
  }
}

TEST(ProtocolOperators, InvalidOutcome) {
  try {
    protocol_operators(0, 0.1);
    FAIL() << "expected InvalidOutcome";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidOutcome);
  }
}

TEST(SimulateProtocol, MaximallyMixedGivesNothing) {
  for (double theta : {0.0, 0.4, 1.9}) EXPECT_NEAR(simulate_protocol(DensityMatrix(), theta, kRef).e_out, 0.0, 1e-15);
}

TEST(SimulateProtocol, GroundStateAtQuarterPi) {
  const auto r = simulate_protocol(eigenprojector(kRef, 1), pi / 4.0, kRef);
  EXPECT_NEAR(r.e_out, (4.0 - 12.0) / std::sqrt(20.0), 1e-12);
  EXPECT_NEAR(r.e_out, -1.78885, 1e-5);
  EXPECT_DOUBLE_EQ(r.e_out, r.e_a - r.e_b);
}

TEST(SimulateProtocol, ZeroAngleIsExactlyZero) {
  random::Engine rng(31);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(simulate_protocol(random::density_matrix(rng), 0.0, kRef).e_out, 0.0);
}

TEST(SimulateProtocol, RejectsStronglyNegativeState) {
  Operator m = Operator::Zero();
  m.diagonal() << 1.1, -0.1, 0.0, 0.0;
  try {
    simulate_protocol(DensityMatrix(m), 0.1, kRef);
    FAIL() << "expected InvalidState";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidState);
  }
}

TEST(SimulateProtocol, MeasurementLeavesBAndInteractionEnergyUnchanged) {
  random::Engine rng(32);
  const Operator h_b = kRef.eps_b * pauli::on_b(pauli::z());
  const Operator v = 2.0 * kRef.kappa * pauli::kron(pauli::x(), pauli::x());
  for (int i = 0; i < 100; ++i) {
    const Operator rho = random::density_matrix(rng).matrix();
    for (const Operator* term : {&h_b, &v}) {
      double after = 0.0;
      for (int u : {1, -1}) {
        const Operator p = protocol_operators(u, 0.0).projector;
        after += (*term * p * rho * p).trace().real();
      }
      EXPECT_NEAR(after, (*term * rho).trace().real(), 1e-14);
    }
  }
}

TEST(ProtocolCoefficients, GroundState) {
  const Coefficients c = protocol_coefficients(eigenprojector(kRef, 1), kRef);
  EXPECT_NEAR(c.d, 4.0 / std::sqrt(20.0), 1e-12);
  EXPECT_NEAR(c.f, 12.0 / std::sqrt(20.0), 1e-12);
  EXPECT_NEAR(c.d, 0.894427, 1e-6);
  EXPECT_NEAR(c.f, 2.683282, 1e-6);
}

TEST(ProtocolCoefficients, MaximallyMixed) {
  const Coefficients c = protocol_coefficients(DensityMatrix(), kRef);
  EXPECT_EQ(c.d, 0.0);
  EXPECT_EQ(c.f, 0.0);
}

TEST(ProtocolCoefficients, ProductStateGroundAExcitedB) {
  const DensityMatrix ge = basis_state(2);
  const Coefficients c = protocol_coefficients(ge, kRef);
  EXPECT_NEAR(c.f, -2.0, 1e-15);
  EXPECT_NEAR(c.d, -2.0, 1e-15);
  EXPECT_NEAR(optimal_angles(c).e_max, 2.0 * std::sqrt(2.0) + 2.0, 1e-14);
  // cross-check against the brute-force maximum of the simulation
  double best = -1e9;
  for (int i = 0; i < 10000; ++i) best = std::max(best, simulate_protocol(ge, pi * i / 10000.0, kRef).e_out);
  EXPECT_NEAR(best, 2.0 * std::sqrt(2.0) + 2.0, 1e-6);
}

TEST(ProtocolCoefficients, ClosedFormMatchesSimulation) {
  random::Engine rng(33);
  for (int i = 0; i < 1000; ++i) {
    const SystemParams p = random::system_params(rng);
    const DensityMatrix rho = random::density_matrix(rng);
    const double theta = random::uniform(rng, 0.0, pi);
    EXPECT_NEAR(energy_output(protocol_coefficients(rho, p), theta), simulate_protocol(rho, theta, p).e_out, 1e-10);
  }
}

TEST(OptimalAngles, EqualCoefficients) { EXPECT_NEAR(optimal_angles({1.5, 1.5}).theta1, pi / 8.0, 1e-15); }

TEST(OptimalAngles, ThreeFourFive) { EXPECT_NEAR(optimal_angles({3.0, 4.0}).e_max, 1.0, 1e-15); }

TEST(OptimalAngles, DegenerateConvention) {
  const auto a = optimal_angles({0.0, 0.0});
  EXPECT_EQ(a.theta1, 0.0);
  EXPECT_EQ(a.theta2, pi / 2.0);
  EXPECT_EQ(a.e_max, 0.0);
}

TEST(OptimalAngles, GroundStateMaximum) {
  const DensityMatrix g = eigenprojector(kRef, 1);
  const double e_max = optimal_angles(protocol_coefficients(g, kRef)).e_max;
  // oracle: sqrt(8) - 12/sqrt(20), confirmed on a 10^4-point grid of the simulation
  EXPECT_NEAR(e_max, std::sqrt(8.0) - 12.0 / std::sqrt(20.0), 1e-14);
  EXPECT_NEAR(e_max, 0.1451455517, 1e-10);
  double best = -1e9;
  for (int i = 0; i < 10000; ++i) best = std::max(best, simulate_protocol(g, pi * i / 10000.0, kRef).e_out);
  EXPECT_NEAR(best, 0.145145548, 1e-9);
  EXPECT_NEAR(e_max, best, 1e-6);
}

TEST(OptimalAngles, StationaryPointProperties) {
  random::Engine rng(34);
  for (int i = 0; i < 2000; ++i) {
    const Coefficients c{random::uniform(rng, -5.0, 5.0), random::uniform(rng, -5.0, 5.0)};
    const auto a = optimal_angles(c);
    for (double t : {a.theta1, a.theta2, a.theta_star}) {
      EXPECT_GE(t, 0.0);
      EXPECT_LT(t, pi);
      // dE/dtheta = 2 D cos 2t - 2 F sin 2t vanishes
      EXPECT_NEAR(c.d * std::cos(2.0 * t) - c.f * std::sin(2.0 * t), 0.0, 1e-12);
    }
    EXPECT_NEAR(std::tan(2.0 * a.theta1), c.d / c.f, 1e-9 * (1.0 + std::abs(c.d / c.f)));
    EXPECT_NEAR(std::fmod(a.theta2 - a.theta1 + pi, pi), pi / 2.0, 1e-12);
    const double e1 = energy_output(c, a.theta1), e2 = energy_output(c, a.theta2);
    EXPECT_NEAR(a.e_max, std::max(e1, e2), 1e-12);
    EXPECT_NEAR(energy_output(c, a.theta_star), a.e_max, 1e-12);
    EXPECT_NEAR(a.e_max, std::hypot(c.d, c.f) - c.f, 1e-12);
    EXPECT_GE(a.e_max, 0.0);
    EXPECT_NEAR(e1 + e2, -2.0 * c.f, 1e-12);
  }
}

TEST(OptimalAngles, ZeroMaximumOnlyWithoutD) {
  EXPECT_EQ(optimal_angles({0.0, 2.0}).e_max, 0.0);
  EXPECT_GT(optimal_angles({0.0, -2.0}).e_max, 0.0);
  EXPECT_GT(optimal_angles({1e-6, 2.0}).e_max, 0.0);
}

TEST(EnergyOutput, PiPeriodic) {
  random::Engine rng(35);
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = random::density_matrix(rng);
    const double t = random::uniform(rng, 0.0, pi);
    EXPECT_NEAR(simulate_protocol(rho, t, kRef).e_out, simulate_protocol(rho, t + pi, kRef).e_out, 1e-13);
  }
}

TEST(EnergyOutput, IncoherentStateWithoutCoupling) {
  random::Engine rng(36);
  const SystemParams p{1.7, 0.9, 1e-13};
  for (int i = 0; i < 100; ++i) {
    Operator m = Operator::Zero();
    for (int k = 0; k < 4; ++k) m(k, k) = random::uniform(rng, 0.0, 1.0);
    const DensityMatrix rho = DensityMatrix::normalized(m);
    const Coefficients c = protocol_coefficients(rho, p);
    const auto a = optimal_angles(c);
    EXPECT_NEAR(simulate_protocol(rho, a.theta_star, p).e_out, std::max(0.0, -2.0 * c.f), 1e-10);
  }
}

TEST(EigenstateEout, AntisymmetryAndOracle) {
  random::Engine rng(37);
  for (int i = 0; i < 20; ++i) {
    const SystemParams p = random::system_params(rng);
    for (int j = 0; j < 100; ++j) {
      const double theta = pi * j / 99.0;
      EXPECT_EQ(eigenstate_eout(p, 1, theta) + eigenstate_eout(p, 4, theta), 0.0);
      EXPECT_EQ(eigenstate_eout(p, 2, theta) + eigenstate_eout(p, 3, theta), 0.0);
    }
    for (int k = 1; k <= 4; ++k) {
      const double theta = random::uniform(rng, 0.0, pi);
      EXPECT_NEAR(eigenstate_eout(p, k, theta), simulate_protocol(eigenprojector(p, k), theta, p).e_out, 1e-10);
    }
  }
}

TEST(EigenstateEout, ReferenceValues) {
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(eigenstate_eout(kRef, k, 0.0), 0.0);
  EXPECT_NEAR(eigenstate_eout(kRef, 1, pi / 4.0), -1.78885, 1e-5);
  try {
    eigenstate_eout(kRef, 5, 0.1);
    FAIL() << "expected InvalidIndex";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidIndex);
  }
}

TEST(InjectedEnergy, ReferenceValues) {
  EXPECT_NEAR(injected_energy(basis_state(3), kRef), kRef.eps_a, 1e-15);
  EXPECT_NEAR(injected_energy(DensityMatrix(), kRef), 0.0, 1e-15);
  const DensityMatrix g = eigenprojector(kRef, 1);
  EXPECT_NEAR(injected_energy(g, kRef), 2.0 * std::cos(2.0 * analytic_spectrum(kRef).phi1), 1e-14);
  EXPECT_NEAR(injected_energy(g, kRef), 1.78885, 1e-5);
}

TEST(InjectedEnergy, MatchesSimulation) {
  random::Engine rng(38);
  for (int i = 0; i < 200; ++i) {
    const SystemParams p = random::system_params(rng);
    const DensityMatrix rho = random::density_matrix(rng);
    EXPECT_NEAR(injected_energy(rho, p), simulate_protocol(rho, 0.5, p).injected(), 1e-12);
  }
}

TEST(XState, CoefficientsMatchGeneralForm) {
  const XStateParams x{0.4, 0.2, 0.15, 0.25, 0.2, 0.1, 0.3, -0.4};
  random::Engine rng(39);
  for (int i = 0; i < 50; ++i) {
    const SystemParams p = random::system_params(rng);
    const Coefficients general = protocol_coefficients(x.matrix(), p);
    const Coefficients closed = x_state_coefficients(x, p);
    EXPECT_NEAR(closed.d, general.d, 1e-14);
    EXPECT_NEAR(closed.f, general.f, 1e-14);
    // the version without the factor 2 misses the coherence contribution once
    const Coefficients printed = x_state_coefficients_as_printed(x, p);
    EXPECT_NEAR(general.d - printed.d, p.eps_b * x.coherence(), 1e-14);
  }
}

TEST(XState, Validation) {
  EXPECT_THROW((XStateParams{0.5, 0.5, 0.1, 0.0}.validate()), Error);
  EXPECT_THROW((XStateParams{0.25, 0.25, 0.25, 0.25, 0.3}.validate()), Error);
  EXPECT_NO_THROW((XStateParams{0.25, 0.25, 0.25, 0.25, 0.25}.validate()));
}

TEST(EvaluateProtocol, PolicySelection) {
  const DensityMatrix g = eigenprojector(kRef, 1);
  const auto opt = evaluate_protocol(g, kRef, ThetaPolicy::optimal());
  EXPECT_NEAR(opt.e_out, opt.e_max, 1e-12);
  EXPECT_NEAR(opt.e_out, opt.e_a - opt.e_b, 1e-12);
  const auto t1 = evaluate_protocol(g, kRef, {ThetaPolicyKind::theta1, 0.0});
  EXPECT_NEAR(t1.e_out, t1.e_out_theta1(), 1e-12);
  const auto t2 = evaluate_protocol(g, kRef, {ThetaPolicyKind::theta2, 0.0});
  EXPECT_NEAR(t2.e_out, t2.e_out_theta2(), 1e-12);
  const auto fixed = evaluate_protocol(g, kRef, ThetaPolicy::fixed(pi / 4.0));
  EXPECT_NEAR(fixed.e_out, -1.78885, 1e-5);
  EXPECT_DOUBLE_EQ(fixed.theta, pi / 4.0);
}

}  // namespace
}  // namespace qet
