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

#include <cstddef>
#include <utility>
#include <vector>

#include "qig/channel.hpp"
#include "qig/dilation.hpp"
#include "qig/majorization.hpp"
#include "qig/rng.hpp"

namespace qig {

struct RandomInstanceParams {
  int dim = 2;
  int n_states = 2;
  int n_kraus = 2;
  int n_groups = 1;   // 1 = fully merged record, n_kraus = efficient
  bool rank_one = false;
};

/// Random ensemble of full-rank states with a flat-Dirichlet prior.
inline Ensemble random_ensemble(int dim, int n_states, Rng& rng) {
  std::vector<DensityMatrix> states;
  states.reserve(static_cast<std::size_t>(n_states));
  for (int i = 0; i < n_states; ++i) states.push_back(random_density(dim, rng));
  return Ensemble(random_prob_vector(n_states, rng), std::move(states));
}

/// Partition operators into n_groups observed outcomes: after a shuffle,
/// each group gets one operator, the rest land uniformly.
inline GroupedMeasurement group_randomly(int dim, std::vector<cmat> ops, int n_groups,
                                         Rng& rng) {
  const int m = static_cast<int>(ops.size());
  if (n_groups < 1 || n_groups > m)
    throw invariant_error("group_randomly: need 1 <= n_groups <= operator count");
  std::vector<std::size_t> order(ops.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(order);
  std::vector<std::vector<cmat>> groups(static_cast<std::size_t>(n_groups));
  for (int pos = 0; pos < m; ++pos) {
    const int g = pos < n_groups ? pos : rng.uniform_int(n_groups);
    groups[static_cast<std::size_t>(g)].push_back(
        std::move(ops[order[static_cast<std::size_t>(pos)]]));
  }
  return GroupedMeasurement(dim, std::move(groups));
}

inline Instance generate_random_instance(const RandomInstanceParams& p, Rng& rng) {
  Ensemble eps = random_ensemble(p.dim, p.n_states, rng);
  std::vector<cmat> ops = p.rank_one ? random_rank_one_kraus_set(p.dim, p.n_kraus, rng)
                                     : random_kraus_set(p.dim, p.n_kraus, rng);
  GroupedMeasurement meas = group_randomly(p.dim, std::move(ops), p.n_groups, rng);
  return Instance{std::move(eps), std::move(meas)};
}

/// Binary symmetric channel kernel with the given flip probability.
inline std::vector<std::vector<double>> bsc_kernel(double flip) {
  if (flip < 0.0 || flip > 1.0)
    throw invariant_error("bsc_kernel: flip probability must be in [0, 1]");
  return {{1.0 - flip, flip}, {flip, 1.0 - flip}};
}

/// Random row-stochastic kernel, n_in x n_out.
inline std::vector<std::vector<double>> random_kernel(int n_in, int n_out, Rng& rng) {
  std::vector<std::vector<double>> k;
  k.reserve(static_cast<std::size_t>(n_in));
  for (int i = 0; i < n_in; ++i) k.push_back(random_prob_vector(n_out, rng).probs());
  return k;
}

inline Instance generate_classical_instance(const ProbVector& prior,
                                            const std::vector<std::vector<double>>& kernel) {
  auto [eps, meas] = classical_channel(prior, kernel);
  return Instance{std::move(eps), std::move(meas)};
}

/// Completely symmetric classical measurement over a random diagonal
/// ensemble of basis projectors.
inline Instance generate_symmetric_classical_instance(const ProbVector& kernel, Rng& rng) {
  const int d = static_cast<int>(kernel.size());
  GroupedMeasurement meas = symmetric_classical_measurement(kernel, d);
  std::vector<DensityMatrix> states;
  states.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    cmat proj = cmat::Zero(d, d);
    proj(i, i) = 1.0;
    states.push_back(DensityMatrix(std::move(proj)));
  }
  return Instance{Ensemble(random_prob_vector(d, rng), std::move(states)),
                  std::move(meas)};
}

/// Rank-1 seed projector |0><0| in dimension d, the canonical generator
/// for covariant-measurement approximations.
inline cmat basis_projector_seed(int d) {
  cmat seed = cmat::Zero(d, d);
  seed(0, 0) = 1.0;
  return seed;
}

/// Approximate unitarily covariant measurement over the eigen-ensemble of
/// a random state.
inline Instance generate_uc_instance(int d, int n_samples, Rng& rng) {
  GroupedMeasurement meas = uc_measurement_approx(basis_projector_seed(d), n_samples, rng);
  Ensemble eps = eigen_ensemble(random_density(d, rng));
  return Instance{std::move(eps), std::move(meas)};
}

/// Commuting coding states (shared random eigenbasis, random spectra) and
/// the projective measurement in that common eigenbasis: the Holevo bound
/// is saturated on such instances.
inline Instance generate_commuting_instance(int d, int n_states, Rng& rng) {
  const cmat basis = haar_unitary(d, rng);
  std::vector<DensityMatrix> states;
  states.reserve(static_cast<std::size_t>(n_states));
  for (int i = 0; i < n_states; ++i) {
    const ProbVector spectrum = random_prob_vector(d, rng);
    cmat diag = cmat::Zero(d, d);
    for (int k = 0; k < d; ++k) diag(k, k) = spectrum[static_cast<std::size_t>(k)];
    cmat m = basis * diag * basis.adjoint();
    m = ((m + m.adjoint()) / 2.0).eval();
    states.push_back(DensityMatrix(std::move(m)));
  }
  std::vector<cmat> projectors;
  projectors.reserve(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k)
    projectors.push_back(basis.col(k) * basis.col(k).adjoint());
  return Instance{Ensemble(random_prob_vector(n_states, rng), std::move(states)),
                  GroupedMeasurement::efficient_from(d, projectors)};
}

/// Random ensemble on a bipartite system, for partial-trace monotonicity
/// checks.
inline JointEnsemble generate_joint_ensemble(int dim_a, int dim_b, int n_states, Rng& rng) {
  return JointEnsemble(random_ensemble(dim_a * dim_b, n_states, rng), {dim_a, dim_b});
}

}  // namespace qig
