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

// Dense complex kernel for two-qubit operators (4x4) and their
// superoperators (16x16) acting on column-stacked density matrices.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "qet/errors.hpp"

namespace qet {

using Complex = std::complex<double>;
using Operator = Eigen::Matrix<Complex, 4, 4>;
using Superoperator = Eigen::Matrix<Complex, 16, 16>;
using LiouvilleVector = Eigen::Matrix<Complex, 16, 1>;

inline constexpr Complex kI{0.0, 1.0};

inline double max_abs_entry(const Operator& m) { return m.cwiseAbs().maxCoeff(); }

inline double hermiticity_defect(const Operator& m) { return max_abs_entry(m - m.adjoint()); }

/// Column stacking: index (col * 4 + row).
inline LiouvilleVector stack(const Operator& m) {
  LiouvilleVector v;
  for (int col = 0; col < 4; ++col)
    for (int row = 0; row < 4; ++row) v(col * 4 + row) = m(row, col);
  return v;
}

inline Operator unstack(const LiouvilleVector& v) {
  Operator m;
  for (int col = 0; col < 4; ++col)
    for (int row = 0; row < 4; ++row) m(row, col) = v(col * 4 + row);
  return m;
}

/// Superoperator of rho -> a * rho * b under column stacking, i.e. transpose(b) (x) a.
inline Superoperator superoperator_embed(const Operator& a, const Operator& b) {
  Superoperator s;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i)
      for (int l = 0; l < 4; ++l)
        for (int k = 0; k < 4; ++k) s(j * 4 + i, l * 4 + k) = a(i, k) * b(l, j);
  return s;
}

/// Hermitian, unit-trace 4x4 operator. Positivity is not enforced: Redfield
/// steady states may carry small negative eigenvalues and are kept as computed.
class DensityMatrix {
 public:
  static constexpr double kTolerance = 1e-10;

  DensityMatrix() : m_(Operator::Identity() / 4.0) {}

  explicit DensityMatrix(const Operator& m) : m_(m) {
    const double scale = std::max(1.0, max_abs_entry(m));
    if (!m.allFinite()) throw Error(ErrorKind::InvalidState, "density matrix has non-finite entries");
    if (hermiticity_defect(m) > kTolerance * scale)
      throw Error(ErrorKind::InvalidState, "density matrix is not Hermitian");
    if (std::abs(m.trace() - Complex{1.0}) > kTolerance * scale)
      throw Error(ErrorKind::InvalidState, "density matrix does not have unit trace");
  }

  /// Hermitizes (m + m^dag)/2 and rescales to unit trace.
  static DensityMatrix normalized(const Operator& m) {
    Operator h = 0.5 * (m + m.adjoint());
    const Complex tr = h.trace();
    if (!(std::abs(tr) > 0.0)) throw Error(ErrorKind::InvalidState, "cannot normalize a traceless operator");
    return DensityMatrix(Operator(h / tr.real()));
  }

  static DensityMatrix maximally_mixed() { return DensityMatrix(); }

  const Operator& matrix() const { return m_; }

 private:
  Operator m_;
};

struct EigenDecomposition {
  Eigen::Vector4d values;  // ascending
  Operator vectors;        // orthonormal columns
};

inline EigenDecomposition hermitian_eigendecomposition(const Operator& m) {
  const double scale = std::max(1.0, max_abs_entry(m));
  if (hermiticity_defect(m) > 1e-12 * scale)
    throw Error(ErrorKind::NonHermitianInput, "hermitian_eigendecomposition: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Operator> solver(m);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

inline double min_eigenvalue(const DensityMatrix& rho) {
  return hermitian_eigendecomposition(rho.matrix()).values(0);
}

struct NullVectorResult {
  LiouvilleVector vector;  // scaled so that unstack(vector) has unit trace
  double gap_ratio;        // second-smallest / smallest singular value
  double residual;         // ||L v|| / (||L|| ||v||)
};

/// Kernel of a 16x16 generator from its singular value decomposition.
inline NullVectorResult null_vector(const Superoperator& l) {
  Eigen::JacobiSVD<Superoperator> svd(l, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();  // descending
  const double norm = s(0);
  if (!(norm > 0.0)) throw Error(ErrorKind::DegenerateKernel, "null_vector: zero matrix has a full kernel");

  LiouvilleVector v = svd.matrixV().col(15);
  const double residual = (l * v).norm() / (norm * v.norm());
  if (!(residual < 1e-10))
    throw Error(ErrorKind::NoKernel, "null_vector: no kernel (relative residual " + std::to_string(residual) + ")");

  const double floor = std::numeric_limits<double>::epsilon() * norm;
  const double gap_ratio = s(14) / std::max(s(15), floor);
  if (gap_ratio < 1e3)
    throw Error(ErrorKind::DegenerateKernel,
                "null_vector: kernel not unique (gap ratio " + std::to_string(gap_ratio) + ")");

  const Complex tr = v(0) + v(5) + v(10) + v(15);
  if (std::abs(tr) < 1e-12) throw Error(ErrorKind::ZeroTraceKernel, "null_vector: kernel vector is traceless");
  v /= tr;
  return {v, gap_ratio, residual};
}

/// Maximum absolute row sum.
inline double infinity_norm(const Superoperator& l) { return l.cwiseAbs().rowwise().sum().maxCoeff(); }

namespace detail {

inline constexpr double kStepBound = 0.1;  // ||L||_inf * h
inline constexpr int kChunk = 64;

// One classical RK4 step for dx/dt = L x is exactly x <- S x with
// S = I + hL + (hL)^2/2 + (hL)^3/6 + (hL)^4/24.
inline Superoperator rk4_step_matrix(const Superoperator& l, double h) {
  const Superoperator id = Superoperator::Identity();
  const Superoperator hl = h * l;
  return id + hl * (id + hl / 2.0 * (id + hl / 3.0 * (id + hl / 4.0)));
}

inline Superoperator power(Superoperator base, int exponent) {
  Superoperator result = Superoperator::Identity();
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace detail

/// Fixed-step RK4 propagation of d(stack rho)/dt = L stack(rho) over `duration`.
inline DensityMatrix propagate_generator(const Superoperator& l, const DensityMatrix& rho0, double duration) {
  const double norm = infinity_norm(l);
  if (norm == 0.0 || duration <= 0.0) return rho0;
  const long steps = static_cast<long>(std::ceil(duration * norm / detail::kStepBound));
  const double h = duration / static_cast<double>(steps);
  const Superoperator step = detail::rk4_step_matrix(l, h);
  const Superoperator chunk = detail::power(step, detail::kChunk);

  LiouvilleVector x = stack(rho0.matrix());
  long done = 0;
  for (; done + detail::kChunk <= steps; done += detail::kChunk) x = chunk * x;
  for (; done < steps; ++done) x = step * x;
  return DensityMatrix::normalized(unstack(x));
}

/// Propagates until ||L stack(rho)|| < tol; NotConverged if t_max is reached first.
inline DensityMatrix integrate_generator(const Superoperator& l, const DensityMatrix& rho0, double t_max, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidParams, "integrate_generator: tol must be positive");
  LiouvilleVector x = stack(rho0.matrix());
  if ((l * x).norm() < tol) return rho0;

  const double norm = infinity_norm(l);
  const double h = detail::kStepBound / norm;
  const long steps = static_cast<long>(std::ceil(t_max / h));
  const Superoperator step = detail::rk4_step_matrix(l, h);
  const Superoperator chunk = detail::power(step, detail::kChunk);

  double derivative = 0.0;
  for (long done = 0; done < steps;) {
    if (done + detail::kChunk <= steps) {
      x = chunk * x;
      done += detail::kChunk;
    } else {
      x = step * x;
      ++done;
    }
    derivative = (l * x).norm();
    if (derivative < tol) return DensityMatrix::normalized(unstack(x));
  }
  throw Error(ErrorKind::NotConverged,
              "integrate_generator: derivative norm " + std::to_string(derivative) + " still above tolerance at t_max");
}

}  // namespace qet
