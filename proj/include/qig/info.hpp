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
#include <cstddef>
#include <optional>
#include <vector>

#include "qig/channel.hpp"
#include "qig/matrix.hpp"

namespace qig {

/// Every information scalar for one (ensemble, measurement) pair, plus
/// the signed gap of each certified bound. Gap convention: gap = bound
/// minus bounded quantity, so every inequality reads gap >= 0.
struct BoundReport {
  double mutual_info = 0.0;          // M(I:J), bits
  double chi = 0.0;                  // Holevo quantity of the prior ensemble
  std::vector<double> chi_j;         // per observed outcome; 0 for impossible ones
  double sum_pj_chi_j = 0.0;         // Σ_j P(j) χ_j
  double avg_entropy_reduction = 0.0;               // <ΔS(ρ)> for the ensemble state
  std::vector<double> per_state_entropy_reductions; // <ΔS(ρ_i)> per coding state

  double gap_holevo = 0.0;        // χ - M
  double gap_sww_theorem1 = 0.0;  // χ - Σ_j P(j)χ_j - M
  double gap_gen_hall = 0.0;      // <ΔS(ρ)> - Σ_i P(i)<ΔS(ρ_i)> - M
  double gap_sww_fine = 0.0;      // SWW gap on the singleton-group refinement

  // Defined only for efficient measurements, where <ΔS> >= 0 must hold.
  std::optional<bool> ozawa_nonneg;
};

/// Mutual information of the (ensemble index, observed outcome) pair, in
/// bits. Computed in the reverse form H[P(j)] - Σ_i P(i) H[P(j|i)] and
/// cross-checked against H[I] + H[J] - H[I,J] at 1e-10; tiny negative
/// results from roundoff clamp to 0.
inline double mutual_information(const OutcomeTable& table, const ProbVector& prior) {
  const std::size_t ni = table.p_j_given_i.size();
  const std::size_t nj = table.p_j.size();
  if (prior.size() != ni)
    throw invariant_error("mutual_information: prior length " +
                          std::to_string(prior.size()) + " != table rows " +
                          std::to_string(ni));

  double m_reverse = entropy_bits(table.p_j);
  for (std::size_t i = 0; i < ni; ++i)
    if (prior[i] > 0.0) m_reverse -= prior[i] * entropy_bits(table.p_j_given_i[i]);

  std::vector<double> joint;
  joint.reserve(ni * nj);
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t j = 0; j < nj; ++j) joint.push_back(prior[i] * table.p_j_given_i[i][j]);
  const double m_standard =
      entropy_bits(prior.probs()) + entropy_bits(table.p_j) - entropy_bits(joint);

  if (std::abs(m_reverse - m_standard) > tol::cross_check)
    throw error("mutual_information: reverse and standard forms disagree by " +
                num_str(std::abs(m_reverse - m_standard)) + " bits");
  if (m_reverse < -tol::zero_prob)
    throw error("mutual_information: negative value " + num_str(m_reverse));
  return m_reverse < 0.0 ? 0.0 : m_reverse;
}

/// Holevo quantity χ = S(ρ) - Σ_i P(i) S(ρ_i).
inline double holevo_chi(const Ensemble& eps) {
  double chi = von_neumann_entropy(ensemble_state(eps));
  for (std::size_t i = 0; i < eps.size(); ++i)
    if (eps.prob(i) > 0.0) chi -= eps.prob(i) * von_neumann_entropy(eps.state(i));
  return chi;
}

/// Holevo quantity of the ensemble that remains after observing outcome j.
inline double chi_j(const Ensemble& eps, const GroupedMeasurement& meas, std::size_t j) {
  return holevo_chi(posterior_ensemble(eps, meas, j));
}

/// Average entropy reduction <ΔS(ρ)> = S(ρ) - Σ_j P(j) S(σ_j), in bits.
/// Non-negative for efficient measurements; may be negative when the
/// measurement record is partly discarded.
inline double avg_entropy_reduction(const DensityMatrix& rho,
                                    const GroupedMeasurement& meas) {
  if (rho.dim() != meas.dim())
    throw invariant_error("avg_entropy_reduction: state dimension " +
                          std::to_string(rho.dim()) + " != measurement dimension " +
                          std::to_string(meas.dim()));
  double result = von_neumann_entropy(rho);
  for (std::size_t j = 0; j < meas.group_count(); ++j) {
    cmat b = cmat::Zero(meas.dim(), meas.dim());
    for (const auto& a : meas.group(j)) b += a * rho.matrix() * a.adjoint();
    const double pj = b.trace().real();
    if (pj <= tol::zero_prob) continue;
    result -= pj * von_neumann_entropy(DensityMatrix(b / pj));
  }
  return result;
}

namespace detail {

/// χ - Σ_j P(j) χ_j - M for an already-computed M, on any measurement.
inline double sww_gap(const Ensemble& eps, const GroupedMeasurement& meas, double chi,
                      double mutual_info, std::vector<double>* chi_j_out,
                      double* sum_out) {
  const OutcomeTable table = outcome_table(eps, meas);
  std::vector<double> chis(meas.group_count(), 0.0);
  double sum = 0.0;
  for (std::size_t j = 0; j < meas.group_count(); ++j) {
    if (table.p_j[j] <= tol::zero_prob) continue;
    chis[j] = chi_j(eps, meas, j);
    sum += table.p_j[j] * chis[j];
  }
  if (chi_j_out) *chi_j_out = std::move(chis);
  if (sum_out) *sum_out = sum;
  return chi - sum - mutual_info;
}

}  // namespace detail

/// Full signed-gap report for one instance. The fine-grained SWW gap is
/// evaluated on the singleton-group refinement of the measurement (every
/// (k, j) pair observed) while M stays that of the observed grouping.
inline BoundReport bound_report(const Ensemble& eps, const GroupedMeasurement& meas) {
  detail::require_same_dim(eps, meas, "bound_report");
  BoundReport r;
  const OutcomeTable table = outcome_table(eps, meas);
  r.mutual_info = mutual_information(table, eps.probs());
  r.chi = holevo_chi(eps);
  r.gap_sww_theorem1 =
      detail::sww_gap(eps, meas, r.chi, r.mutual_info, &r.chi_j, &r.sum_pj_chi_j);
  r.gap_holevo = r.chi - r.mutual_info;

  r.avg_entropy_reduction = avg_entropy_reduction(ensemble_state(eps), meas);
  r.per_state_entropy_reductions.reserve(eps.size());
  double weighted = 0.0;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const double ds = avg_entropy_reduction(eps.state(i), meas);
    r.per_state_entropy_reductions.push_back(ds);
    weighted += eps.prob(i) * ds;
  }
  r.gap_gen_hall = r.avg_entropy_reduction - weighted - r.mutual_info;

  r.gap_sww_fine =
      detail::sww_gap(eps, meas.refined(), r.chi, r.mutual_info, nullptr, nullptr);

  if (meas.efficient()) r.ozawa_nonneg = r.avg_entropy_reduction >= -tol::gap;
  return r;
}

}  // namespace qig
