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
#include <string>
#include <utility>
#include <vector>

#include "qig/matrix.hpp"

namespace qig {

/// Encoding ensemble {P(i), ρ_i}: states of a common dimension with a
/// probability vector over them.
class Ensemble {
 public:
  Ensemble(ProbVector probs, std::vector<DensityMatrix> states)
      : probs_(std::move(probs)), states_(std::move(states)) {
    if (states_.empty() || probs_.size() != states_.size())
      throw invariant_error("Ensemble: need matching, nonempty probabilities and states");
    for (const auto& s : states_)
      if (s.dim() != states_.front().dim())
        throw invariant_error("Ensemble: states have mixed dimensions");
  }

  std::size_t size() const { return states_.size(); }
  int dim() const { return states_.front().dim(); }
  double prob(std::size_t i) const { return probs_[i]; }
  const DensityMatrix& state(std::size_t i) const { return states_[i]; }
  const ProbVector& probs() const { return probs_; }
  const std::vector<DensityMatrix>& states() const { return states_; }

 private:
  ProbVector probs_;
  std::vector<DensityMatrix> states_;
};

/// A general quantum measurement with Kraus operators A_{kj} partitioned
/// into observed-outcome groups: the observer learns the group index j
/// but not the position k inside the group. Singleton groups model an
/// efficient measurement; a single group holding every operator models a
/// measurement whose record is discarded entirely.
class GroupedMeasurement {
 public:
  GroupedMeasurement(int dim, std::vector<std::vector<cmat>> groups)
      : dim_(dim), groups_(std::move(groups)) {
    if (dim_ < 1) throw invariant_error("GroupedMeasurement: dimension must be >= 1");
    if (groups_.empty())
      throw invariant_error("GroupedMeasurement: needs at least one group");
    cmat sum = cmat::Zero(dim_, dim_);
    for (std::size_t j = 0; j < groups_.size(); ++j) {
      if (groups_[j].empty())
        throw invariant_error("GroupedMeasurement: group " + std::to_string(j) +
                              " is empty");
      for (const auto& a : groups_[j]) {
        if (a.rows() != dim_ || a.cols() != dim_)
          throw invariant_error("GroupedMeasurement: operator in group " +
                                std::to_string(j) + " is " + std::to_string(a.rows()) +
                                "x" + std::to_string(a.cols()) + ", expected " +
                                std::to_string(dim_) + "x" + std::to_string(dim_));
        if (!is_finite(a))
          throw invariant_error("GroupedMeasurement: operator has non-finite entries");
        sum += a.adjoint() * a;
      }
    }
    const double res = (sum - cmat::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
    if (res > tol::completeness)
      throw invariant_error("GroupedMeasurement: incomplete, max |Σ A†A - I| = " +
                            num_str(res));
  }

  /// Efficient measurement: one operator per observed outcome.
  static GroupedMeasurement efficient_from(int dim, const std::vector<cmat>& ops) {
    std::vector<std::vector<cmat>> groups;
    groups.reserve(ops.size());
    for (const auto& a : ops) groups.push_back({a});
    return GroupedMeasurement(dim, std::move(groups));
  }

  int dim() const { return dim_; }
  std::size_t group_count() const { return groups_.size(); }
  const std::vector<cmat>& group(std::size_t j) const { return groups_[j]; }
  const std::vector<std::vector<cmat>>& groups() const { return groups_; }

  std::size_t operator_count() const {
    std::size_t n = 0;
    for (const auto& g : groups_) n += g.size();
    return n;
  }

  bool efficient() const {
    for (const auto& g : groups_)
      if (g.size() != 1) return false;
    return true;
  }

  /// Every (k, j) pair promoted to its own observed outcome.
  GroupedMeasurement refined() const {
    std::vector<std::vector<cmat>> singletons;
    singletons.reserve(operator_count());
    for (const auto& g : groups_)
      for (const auto& a : g) singletons.push_back({a});
    return GroupedMeasurement(dim_, std::move(singletons));
  }

  /// Every operator merged into one group: the whole record discarded.
  GroupedMeasurement merged() const {
    std::vector<cmat> all;
    all.reserve(operator_count());
    for (const auto& g : groups_)
      for (const auto& a : g) all.push_back(a);
    return GroupedMeasurement(dim_, {std::move(all)});
  }

 private:
  int dim_;
  std::vector<std::vector<cmat>> groups_;
};

/// One loadable problem instance: an encoding ensemble plus a grouped
/// measurement of the same dimension.
struct Instance {
  Ensemble ensemble;
  GroupedMeasurement measurement;
};

/// All outcome statistics for one (ensemble, measurement) pair.
/// Conditionals on events of probability <= 1e-12 are stored as zeros and
/// skipped by every averaged quantity.
struct OutcomeTable {
  std::vector<std::vector<double>> p_j_given_i;             // [i][j]
  std::vector<double> p_j;                                  // [j]
  std::vector<std::vector<double>> p_i_given_j;             // [j][i]
  std::vector<std::vector<std::vector<double>>> p_k_given_ji;  // [j][i][k]
  std::vector<std::vector<std::vector<double>>> p_ik_given_j;  // [j][i][k]
};

namespace detail {

inline double clamp_probability(double p, const char* what) {
  if (p < tol::table_entry_floor)
    throw invariant_error(std::string(what) + ": probability " + num_str(p) +
                          " below floor " + num_str(tol::table_entry_floor));
  return p < 0.0 ? 0.0 : p;
}

inline void require_same_dim(const Ensemble& eps, const GroupedMeasurement& meas,
                             const char* where) {
  if (eps.dim() != meas.dim())
    throw invariant_error(std::string(where) + ": ensemble dimension " +
                          std::to_string(eps.dim()) + " != measurement dimension " +
                          std::to_string(meas.dim()));
}

}  // namespace detail

/// Ensemble state ρ = Σ_i P(i) ρ_i.
inline DensityMatrix ensemble_state(const Ensemble& eps) {
  cmat m = cmat::Zero(eps.dim(), eps.dim());
  for (std::size_t i = 0; i < eps.size(); ++i) m += eps.prob(i) * eps.state(i).matrix();
  return DensityMatrix(std::move(m));
}

/// Joint and conditional outcome statistics. P(j|i) = Σ_k Tr[A_{kj}†A_{kj} ρ_i],
/// P(j) = Σ_i P(i) P(j|i), and the conditionals follow by Bayes.
inline OutcomeTable outcome_table(const Ensemble& eps, const GroupedMeasurement& meas) {
  detail::require_same_dim(eps, meas, "outcome_table");
  const std::size_t ni = eps.size();
  const std::size_t nj = meas.group_count();

  // Effects E_{kj} = A_{kj}†A_{kj}, reused across ensemble members.
  std::vector<std::vector<cmat>> effects(nj);
  for (std::size_t j = 0; j < nj; ++j)
    for (const auto& a : meas.group(j)) effects[j].push_back(a.adjoint() * a);

  OutcomeTable t;
  // Unnormalized P(k,j | i).
  std::vector<std::vector<std::vector<double>>> p_kj_given_i(
      nj, std::vector<std::vector<double>>(ni));
  t.p_j_given_i.assign(ni, std::vector<double>(nj, 0.0));
  for (std::size_t i = 0; i < ni; ++i) {
    const cmat& rho = eps.state(i).matrix();
    double row_sum = 0.0;
    for (std::size_t j = 0; j < nj; ++j) {
      double pj = 0.0;
      p_kj_given_i[j][i].reserve(effects[j].size());
      for (const auto& e : effects[j]) {
        const double pkj =
            detail::clamp_probability((e * rho).trace().real(), "outcome_table");
        p_kj_given_i[j][i].push_back(pkj);
        pj += pkj;
      }
      t.p_j_given_i[i][j] = pj;
      row_sum += pj;
    }
    if (std::abs(row_sum - 1.0) > tol::table_sum)
      throw invariant_error("outcome_table: P(j|i) for i = " + std::to_string(i) +
                            " sums to " + num_str(row_sum));
  }

  t.p_j.assign(nj, 0.0);
  for (std::size_t j = 0; j < nj; ++j)
    for (std::size_t i = 0; i < ni; ++i) t.p_j[j] += eps.prob(i) * t.p_j_given_i[i][j];

  t.p_i_given_j.assign(nj, std::vector<double>(ni, 0.0));
  t.p_k_given_ji.assign(nj, std::vector<std::vector<double>>(ni));
  t.p_ik_given_j.assign(nj, std::vector<std::vector<double>>(ni));
  for (std::size_t j = 0; j < nj; ++j) {
    const std::size_t nk = effects[j].size();
    for (std::size_t i = 0; i < ni; ++i) {
      t.p_k_given_ji[j][i].assign(nk, 0.0);
      t.p_ik_given_j[j][i].assign(nk, 0.0);
      if (t.p_j[j] > tol::zero_prob)
        t.p_i_given_j[j][i] = t.p_j_given_i[i][j] * eps.prob(i) / t.p_j[j];
      if (t.p_j_given_i[i][j] > tol::zero_prob)
        for (std::size_t k = 0; k < nk; ++k)
          t.p_k_given_ji[j][i][k] = p_kj_given_i[j][i][k] / t.p_j_given_i[i][j];
      if (t.p_j[j] > tol::zero_prob)
        for (std::size_t k = 0; k < nk; ++k)
          t.p_ik_given_j[j][i][k] = eps.prob(i) * p_kj_given_i[j][i][k] / t.p_j[j];
    }
  }
  return t;
}

/// Post-measurement state σ_{j|i} = Σ_k A_{kj} ρ_i A_{kj}† / P(j|i):
/// the k-average the observer is left with after seeing only j.
inline DensityMatrix post_state(const Ensemble& eps, const GroupedMeasurement& meas,
                                std::size_t i, std::size_t j) {
  detail::require_same_dim(eps, meas, "post_state");
  if (i >= eps.size() || j >= meas.group_count())
    throw invariant_error("post_state: index out of range");
  cmat b = cmat::Zero(meas.dim(), meas.dim());
  for (const auto& a : meas.group(j)) b += a * eps.state(i).matrix() * a.adjoint();
  const double p = b.trace().real();
  if (p <= tol::zero_prob)
    throw impossible_outcome_error("post_state: outcome " + std::to_string(j) +
                                   " has probability " + num_str(p) + " for state " +
                                   std::to_string(i));
  return DensityMatrix(b / p);
}

/// Receiver's overall post-measurement state σ_j = Σ_k A_{kj} ρ A_{kj}† / P(j).
inline DensityMatrix receiver_state(const Ensemble& eps, const GroupedMeasurement& meas,
                                    std::size_t j) {
  detail::require_same_dim(eps, meas, "receiver_state");
  if (j >= meas.group_count()) throw invariant_error("receiver_state: group out of range");
  const cmat rho = ensemble_state(eps).matrix();
  cmat b = cmat::Zero(meas.dim(), meas.dim());
  for (const auto& a : meas.group(j)) b += a * rho * a.adjoint();
  const double p = b.trace().real();
  if (p <= tol::zero_prob)
    throw impossible_outcome_error("receiver_state: outcome " + std::to_string(j) +
                                   " has probability " + num_str(p));
  return DensityMatrix(b / p);
}

/// The ensemble {P(i|j), σ_{j|i}} the receiver holds after outcome j.
/// Members with P(i|j) <= 1e-12 are carried with probability exactly 0
/// and a maximally mixed placeholder state; every downstream quantity
/// weights them by 0.
inline Ensemble posterior_ensemble(const Ensemble& eps, const GroupedMeasurement& meas,
                                   std::size_t j) {
  detail::require_same_dim(eps, meas, "posterior_ensemble");
  if (j >= meas.group_count())
    throw invariant_error("posterior_ensemble: group out of range");
  const std::size_t ni = eps.size();
  std::vector<double> p_j_given_i(ni, 0.0);
  std::vector<cmat> blocks(ni);
  double pj = 0.0;
  for (std::size_t i = 0; i < ni; ++i) {
    cmat b = cmat::Zero(meas.dim(), meas.dim());
    for (const auto& a : meas.group(j)) b += a * eps.state(i).matrix() * a.adjoint();
    p_j_given_i[i] = detail::clamp_probability(b.trace().real(), "posterior_ensemble");
    blocks[i] = std::move(b);
    pj += eps.prob(i) * p_j_given_i[i];
  }
  if (pj <= tol::zero_prob)
    throw impossible_outcome_error("posterior_ensemble: outcome " + std::to_string(j) +
                                   " has probability " + num_str(pj));
  std::vector<double> probs(ni, 0.0);
  std::vector<DensityMatrix> states;
  states.reserve(ni);
  for (std::size_t i = 0; i < ni; ++i) {
    const double pij = eps.prob(i) * p_j_given_i[i] / pj;
    if (pij <= tol::zero_prob || p_j_given_i[i] <= tol::zero_prob) {
      states.push_back(DensityMatrix::maximally_mixed(meas.dim()));
    } else {
      probs[i] = pij;
      states.push_back(DensityMatrix(blocks[i] / p_j_given_i[i]));
    }
  }
  return Ensemble(ProbVector(std::move(probs)), std::move(states));
}

/// Embed a classical channel (prior, stochastic kernel) as commuting
/// quantum objects: basis projectors for the coding states and diagonal
/// Kraus operators with entries √kernel. The quantum mutual information
/// of the embedding equals the classical mutual information of the
/// channel.
inline std::pair<Ensemble, GroupedMeasurement> classical_channel(
    const ProbVector& prior, const std::vector<std::vector<double>>& kernel) {
  const std::size_t n_in = prior.size();
  if (kernel.size() != n_in)
    throw invariant_error("classical_channel: kernel has " +
                          std::to_string(kernel.size()) + " rows, prior has " +
                          std::to_string(n_in) + " entries");
  const std::size_t n_out = kernel.front().size();
  for (const auto& row : kernel) {
    if (row.size() != n_out)
      throw invariant_error("classical_channel: ragged kernel rows");
    ProbVector check(row);  // validates non-negativity and normalization
    (void)check;
  }
  const int d = static_cast<int>(n_in);

  std::vector<DensityMatrix> states;
  states.reserve(n_in);
  for (std::size_t i = 0; i < n_in; ++i) {
    cmat proj = cmat::Zero(d, d);
    proj(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
    states.push_back(DensityMatrix(std::move(proj)));
  }

  std::vector<cmat> ops;
  ops.reserve(n_out);
  for (std::size_t j = 0; j < n_out; ++j) {
    cmat a = cmat::Zero(d, d);
    for (std::size_t i = 0; i < n_in; ++i)
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
          std::sqrt(kernel[i][j]);
    ops.push_back(std::move(a));
  }
  return {Ensemble(prior, std::move(states)),
          GroupedMeasurement::efficient_from(d, ops)};
}

}  // namespace qig
