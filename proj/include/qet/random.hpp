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

// Seeded random operators for property checks.

#pragma once

#include <random>

#include <Eigen/QR>

#include "qet/numerics.hpp"
#include "qet/system_model.hpp"

namespace qet::random {

using Engine = std::mt19937_64;

/// Ginibre matrix with independent standard complex normal entries.
inline Operator ginibre(Engine& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Operator g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = Complex(n(rng), n(rng));
  return g;
}

inline Operator hermitian(Engine& rng) {
  const Operator g = ginibre(rng);
  return (g + g.adjoint()) / 2.0;
}

/// Full-rank density matrix G G^dag / tr.
inline DensityMatrix density_matrix(Engine& rng) {
  const Operator g = ginibre(rng);
  return DensityMatrix::normalized(g * g.adjoint());
}

/// Haar unitary from the QR decomposition of a Ginibre matrix.
inline Operator unitary(Engine& rng) {
  Eigen::HouseholderQR<Operator> qr(ginibre(rng));
  Operator q = qr.householderQ();
  const Operator r = qr.matrixQR();
  for (int j = 0; j < 4; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

inline double uniform(Engine& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

/// System parameters with level splittings in [0.2, 5] and kappa in [0.1, 2].
inline SystemParams system_params(Engine& rng) {
  return {uniform(rng, 0.2, 5.0), uniform(rng, 0.2, 5.0), uniform(rng, 0.1, 2.0)};
}

}  // namespace qet::random
