// Copyright 2026 The qig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qig/errors.hpp"
#include "qig/tolerances.hpp"

namespace qig {

using complex = std::complex<double>;
using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;
using rvec = Eigen::VectorXd;

inline bool is_finite(const cmat& m) { return m.allFinite(); }

/// Largest entrywise deviation from Hermiticity, max_ij |M - M†|.
inline double hermiticity_residual(const cmat& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline void require_square(const cmat& m, const char* where) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw invariant_error(std::string(where) + ": expected a nonempty square matrix, got " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  if (!is_finite(m))
    throw invariant_error(std::string(where) + ": matrix has non-finite entries");
}

struct EighResult {
  rvec eigenvalues;   // ascending
  cmat eigenvectors;  // unitary, columns paired with eigenvalues
};

/// Eigendecomposition of a Hermitian matrix, H = V diag(w) V†.
///
/// Rejects non-square or non-Hermitian (residual > 1e-10) input. The
/// reconstruction residual is at machine scale, far inside the 1e-9
/// contract used by the entropy code.
inline EighResult eigh(const cmat& h) {
  require_square(h, "eigh");
  const double res = hermiticity_residual(h);
  if (res > tol::hermitian)
    throw invariant_error("eigh: matrix is not Hermitian, residual " + num_str(res));
  Eigen::SelfAdjointEigenSolver<cmat> solver(h);
  if (solver.info() != Eigen::Success)
    throw error("eigh: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Kronecker product a ⊗ b. Row/column index of the product is
/// (i_a * rows_b + i_b), so subsystem a is the slow index.
inline cmat tensor(const cmat& a, const cmat& b) {
  cmat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Discrete probability vector: non-negative entries summing to 1
/// within 1e-10.
class ProbVector {
 public:
  explicit ProbVector(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw invariant_error("ProbVector: empty");
    double sum = 0.0;
    for (double p : probs_) {
      if (!std::isfinite(p)) throw invariant_error("ProbVector: non-finite entry");
      if (p < 0.0)
        throw invariant_error("ProbVector: negative entry " + num_str(p));
      sum += p;
    }
    if (std::abs(sum - 1.0) > tol::prob_sum)
      throw invariant_error("ProbVector: entries sum to " + num_str(sum) +
                            ", normalization residual " + num_str(std::abs(sum - 1.0)));
  }

  static ProbVector uniform(std::size_t d) {
    return ProbVector(std::vector<double>(d, 1.0 / static_cast<double>(d)));
  }

  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

 private:
  std::vector<double> probs_;
};

/// -Σ p log2 p over the positive entries; zero terms contribute nothing.
inline double entropy_bits(std::span<const double> p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

inline double shannon_entropy(const ProbVector& p) { return entropy_bits(p.probs()); }

/// Density matrix: Hermitian, unit trace, positive semidefinite within
/// the type tolerances. The clamped spectrum is computed once at
/// construction and cached, so entropy reads are cheap.
class DensityMatrix {
 public:
  explicit DensityMatrix(cmat m) : m_(std::move(m)) {
    require_square(m_, "DensityMatrix");
    const double herm = hermiticity_residual(m_);
    if (herm > tol::hermitian)
      throw invariant_error("DensityMatrix: not Hermitian, residual " + num_str(herm));
    const double tr = m_.trace().real();
    if (std::abs(tr - 1.0) > tol::trace_one)
      throw invariant_error("DensityMatrix: trace " + num_str(tr) +
                            ", unit-trace residual " + num_str(std::abs(tr - 1.0)));
    const EighResult eig = eigh(m_);
    spectrum_.reserve(static_cast<std::size_t>(eig.eigenvalues.size()));
    for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
      double w = eig.eigenvalues[k];
      if (w < tol::eigenvalue_floor)
        throw invariant_error("DensityMatrix: not positive semidefinite, eigenvalue " +
                              num_str(w));
      spectrum_.push_back(w < 0.0 ? 0.0 : w);
    }
  }

  static DensityMatrix maximally_mixed(int d) {
    return DensityMatrix(cmat::Identity(d, d) / static_cast<double>(d));
  }

  /// |ψ⟩⟨ψ| for a (not necessarily normalized) state vector.
  static DensityMatrix pure(const cvec& psi) {
    const double n2 = psi.squaredNorm();
    if (n2 <= 0.0 || !std::isfinite(n2))
      throw invariant_error("DensityMatrix::pure: zero or non-finite state vector");
    return DensityMatrix((psi * psi.adjoint()) / n2);
  }

  int dim() const { return static_cast<int>(m_.rows()); }
  const cmat& matrix() const { return m_; }

  /// Eigenvalues ascending, with values in [-1e-10, 0] clamped to 0.
  const std::vector<double>& spectrum() const { return spectrum_; }

 private:
  cmat m_;
  std::vector<double> spectrum_;
};

/// S(ρ) = -Σ λ log2 λ over the clamped spectrum, in bits.
inline double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_bits(rho.spectrum());
}

enum class Subsystem { a, b };

/// Reduced state of a bipartite system with composite index
/// (i_a * dim_b + i_b).
inline DensityMatrix partial_trace(const DensityMatrix& rho_ab, int dim_a, int dim_b,
                                   Subsystem keep) {
  if (dim_a < 1 || dim_b < 1 || rho_ab.dim() != dim_a * dim_b)
    throw invariant_error("partial_trace: composite dimension " +
                          std::to_string(rho_ab.dim()) + " != " + std::to_string(dim_a) +
                          " * " + std::to_string(dim_b));
  const cmat& m = rho_ab.matrix();
  if (keep == Subsystem::a) {
    cmat out = cmat::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i)
      for (int j = 0; j < dim_a; ++j)
        for (int b = 0; b < dim_b; ++b) out(i, j) += m(i * dim_b + b, j * dim_b + b);
    return DensityMatrix(std::move(out));
  }
  cmat out = cmat::Zero(dim_b, dim_b);
  for (int i = 0; i < dim_b; ++i)
    for (int j = 0; j < dim_b; ++j)
      for (int a = 0; a < dim_a; ++a) out(i, j) += m(a * dim_b + i, a * dim_b + j);
  return DensityMatrix(std::move(out));
}

/// S^{-1/2} for Hermitian positive definite S, via eigh. Eigenvalues
/// below 1e-12 mean S is effectively singular and raise singular_error.
inline cmat hermitian_inverse_sqrt(const cmat& s) {
  const EighResult eig = eigh(s);
  rvec inv_sqrt(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    const double w = eig.eigenvalues[k];
    if (w < tol::singular_floor)
      throw singular_error("hermitian_inverse_sqrt: eigenvalue " + num_str(w) +
                           " below floor " + num_str(tol::singular_floor));
    inv_sqrt[k] = 1.0 / std::sqrt(w);
  }
  return eig.eigenvectors * inv_sqrt.asDiagonal() * eig.eigenvectors.adjoint();
}

}  // namespace qig
