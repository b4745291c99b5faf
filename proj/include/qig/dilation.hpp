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
#include "qig/info.hpp"
#include "qig/matrix.hpp"

namespace qig {

/// Ensemble of states on a composite system, with the subsystem
/// dimensions recorded so partial traces can be taken per member.
class JointEnsemble {
 public:
  JointEnsemble(Ensemble ensemble, std::vector<int> dims)
      : ensemble_(std::move(ensemble)), dims_(std::move(dims)) {
    int product = 1;
    for (int d : dims_) {
      if (d < 1) throw invariant_error("JointEnsemble: subsystem dimension < 1");
      product *= d;
    }
    if (product != ensemble_.dim())
      throw invariant_error("JointEnsemble: composite dimension " +
                            std::to_string(ensemble_.dim()) +
                            " is not the product of the subsystem dimensions");
  }

  const Ensemble& ensemble() const { return ensemble_; }
  const std::vector<int>& dims() const { return dims_; }

 private:
  Ensemble ensemble_;
  std::vector<int> dims_;
};

/// Isometry V = Σ_a |a⟩ ⊗ A_a realizing the measurement as a unitary
/// interaction with an N-dimensional ancilla (N = total operator count)
/// followed by a von Neumann measurement on the ancilla. The ancilla is
/// the slow tensor factor, so block row a of V is A_a.
inline cmat dilate(const GroupedMeasurement& meas) {
  const int d = meas.dim();
  const auto n = static_cast<Eigen::Index>(meas.operator_count());
  cmat v = cmat::Zero(n * d, d);
  Eigen::Index a = 0;
  for (const auto& g : meas.groups())
    for (const auto& op : g) v.block(a++ * d, 0, d, d) = op;
  return v;
}

/// Holevo quantity before and after tracing out one subsystem of a
/// two-part joint ensemble. χ is non-increasing under partial trace, so
/// the second value never exceeds the first beyond eigensolver noise.
inline std::pair<double, double> chi_partial_trace_check(const JointEnsemble& je,
                                                         int traced_subsystem) {
  if (je.dims().size() != 2)
    throw invariant_error("chi_partial_trace_check: expected exactly 2 subsystems, got " +
                          std::to_string(je.dims().size()));
  if (traced_subsystem != 0 && traced_subsystem != 1)
    throw invariant_error("chi_partial_trace_check: traced subsystem must be 0 or 1");
  const Subsystem keep = traced_subsystem == 0 ? Subsystem::b : Subsystem::a;
  const int da = je.dims()[0];
  const int db = je.dims()[1];

  const double chi_before = holevo_chi(je.ensemble());
  std::vector<DensityMatrix> reduced;
  reduced.reserve(je.ensemble().size());
  for (const auto& s : je.ensemble().states())
    reduced.push_back(partial_trace(s, da, db, keep));
  const double chi_after = holevo_chi(Ensemble(je.ensemble().probs(), std::move(reduced)));
  return {chi_before, chi_after};
}

/// Executable certificate of the inefficient-measurement information
/// bound: χ''(QM) must equal M + Σ_j P(j)χ_j (within 1e-8, two stacked
/// eigendecompositions) and must not exceed χ(Q) (within 1e-9).
struct TheoremOneCertificate {
  double chi_q = 0.0;           // Holevo quantity of the prior ensemble
  double chi_qm = 0.0;          // Holevo quantity of the register-correlated states
  double mutual_info = 0.0;     // M(I:J), classical route
  double sum_pj_chi_j = 0.0;    // posterior-ensemble route

  double identity_residual() const { return chi_qm - (mutual_info + sum_pj_chi_j); }
  double slack() const { return chi_q - chi_qm; }
};

namespace detail {

/// The state on (outcome register M) ⊗ Q left after the measurement
/// interaction, decoherence of the ancilla, and the partial trace over
/// it: block j holds Σ_k A_{kj} ρ A_{kj}†, the unnormalized outcome-j
/// branch. Block-diagonal by construction; trace 1 by completeness.
inline DensityMatrix register_correlated_state(const DensityMatrix& rho,
                                               const GroupedMeasurement& meas) {
  const int d = meas.dim();
  const auto nj = static_cast<Eigen::Index>(meas.group_count());
  cmat out = cmat::Zero(nj * d, nj * d);
  for (Eigen::Index j = 0; j < nj; ++j) {
    cmat block = cmat::Zero(d, d);
    for (const auto& a : meas.group(static_cast<std::size_t>(j)))
      block += a * rho.matrix() * a.adjoint();
    out.block(j * d, j * d, d, d) = block;
  }
  return DensityMatrix(std::move(out));
}

}  // namespace detail

/// Run the dilate-decohere-trace construction for the ensemble state and
/// each coding state, and collect the two routes to χ''(QM): the
/// joint-state entropies on one side, the classical mutual information
/// plus posterior Holevo quantities on the other.
inline TheoremOneCertificate theorem1_trace(const Ensemble& eps,
                                            const GroupedMeasurement& meas) {
  detail::require_same_dim(eps, meas, "theorem1_trace");
  TheoremOneCertificate cert;
  cert.chi_q = holevo_chi(eps);

  cert.chi_qm =
      von_neumann_entropy(detail::register_correlated_state(ensemble_state(eps), meas));
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (eps.prob(i) <= 0.0) continue;
    cert.chi_qm -= eps.prob(i) * von_neumann_entropy(
                                     detail::register_correlated_state(eps.state(i), meas));
  }

  const OutcomeTable table = outcome_table(eps, meas);
  cert.mutual_info = mutual_information(table, eps.probs());
  for (std::size_t j = 0; j < meas.group_count(); ++j) {
    if (table.p_j[j] <= tol::zero_prob) continue;
    cert.sum_pj_chi_j += table.p_j[j] * chi_j(eps, meas, j);
  }
  return cert;
}

}  // namespace qig
