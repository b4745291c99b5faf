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
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qig/matrix.hpp"

namespace qig {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based split of a master seed: stream i of a run is
/// reproducible in isolation without replaying streams 0..i-1.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master + 0x9e3779b97f4a7c15ULL * (index + 1));
}

/// Deterministic random source. All distributions are implemented on top
/// of the fully specified mt19937_64 stream, so equal seeds give bitwise
/// identical draws on every platform and toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng stream(std::uint64_t master, std::uint64_t index) {
    return Rng(derive_seed(master, index));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on {0, ..., n-1}, bias-free by rejection.
  int uniform_int(int n) {
    const auto un = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<int>(x % un);
  }

  /// Standard complex Gaussian: re and im each N(0, 1), via Box-Muller.
  complex normal_complex() {
    double u1;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(th), r * std::sin(th)};
  }

  double normal() { return normal_complex().real(); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      std::swap(v[static_cast<std::size_t>(i)],
                v[static_cast<std::size_t>(uniform_int(i + 1))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Matrix of iid standard complex Gaussians (Ginibre ensemble).
inline cmat ginibre(int rows, int cols, Rng& rng) {
  cmat g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = rng.normal_complex();
  return g;
}

/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of
/// diag(R) folded back into Q, which removes the phase ambiguity of the
/// factorization and makes the distribution exactly Haar.
inline cmat haar_unitary(int d, Rng& rng) {
  if (d < 1) throw invariant_error("haar_unitary: dimension must be >= 1");
  const cmat g = ginibre(d, d, rng);
  Eigen::HouseholderQR<cmat> qr(g);
  cmat q = qr.householderQ();
  const cmat r = qr.matrixQR();
  for (int k = 0; k < d; ++k) {
    const complex rkk = r(k, k);
    const double a = std::abs(rkk);
    q.col(k) *= (a > 0.0) ? rkk / a : complex(1.0, 0.0);
  }
  return q;
}

/// ρ = G G† / Tr[G G†] with G Ginibre; a full-rank random state.
inline DensityMatrix random_density(int d, Rng& rng) {
  if (d < 1) throw invariant_error("random_density: dimension must be >= 1");
  const cmat g = ginibre(d, d, rng);
  cmat m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(std::move(m));
}

namespace detail {

/// Whiten raw operators so Σ A†A = I exactly: A_i = G_i S^{-1/2} with
/// S = Σ G_i†G_i. Retries with fresh draws if S is singular.
template <typename DrawFn>
std::vector<cmat> whitened_kraus_set(int d, int m, DrawFn&& draw) {
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<cmat> raw;
    raw.reserve(static_cast<std::size_t>(m));
    cmat s = cmat::Zero(d, d);
    for (int i = 0; i < m; ++i) {
      raw.push_back(draw());
      s += raw.back().adjoint() * raw.back();
    }
    // s is Hermitian up to roundoff; symmetrize before eigh.
    s = ((s + s.adjoint()) / 2.0).eval();
    cmat whitener;
    try {
      whitener = hermitian_inverse_sqrt(s);
    } catch (const singular_error&) {
      continue;
    }
    for (auto& a : raw) a = a * whitener;
    return raw;
  }
  throw singular_error("whitened_kraus_set: normalization matrix singular after 5 attempts");
}

}  // namespace detail

/// Random complete Kraus set {A_i} with Σ A_i†A_i = I, from whitened
/// Ginibre draws.
inline std::vector<cmat> random_kraus_set(int d, int m, Rng& rng) {
  if (d < 1 || m < 1) throw invariant_error("random_kraus_set: need d >= 1 and m >= 1");
  return detail::whitened_kraus_set(d, m, [&] { return ginibre(d, d, rng); });
}

/// Random complete set of rank-1 Kraus operators A_i = |u_i⟩⟨v_i| S^{-1/2}.
/// Needs m >= d for the whitening matrix to be invertible.
inline std::vector<cmat> random_rank_one_kraus_set(int d, int m, Rng& rng) {
  if (d < 1 || m < d)
    throw invariant_error("random_rank_one_kraus_set: need m >= d >= 1");
  return detail::whitened_kraus_set(d, m, [&] {
    const cmat u = ginibre(d, 1, rng);
    const cmat v = ginibre(d, 1, rng);
    return cmat(u * v.adjoint());
  });
}

/// Uniform draw from the probability simplex (flat Dirichlet), via
/// normalized exponentials.
inline ProbVector random_prob_vector(int d, Rng& rng) {
  if (d < 1) throw invariant_error("random_prob_vector: dimension must be >= 1");
  std::vector<double> e(static_cast<std::size_t>(d));
  double sum = 0.0;
  for (auto& x : e) {
    double u;
    do {
      u = rng.uniform();
    } while (u <= 0.0);
    x = -std::log(u);
    sum += x;
  }
  for (auto& x : e) x /= sum;
  return ProbVector(std::move(e));
}

}  // namespace qig
