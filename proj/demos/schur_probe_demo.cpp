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

// "The more you know, the less you get": probes whether information gain
// increases with initial uncertainty for a symmetric classical readout,
// an approximately covariant quantum measurement, and a deliberately
// lopsided readout that breaks the symmetry.

#include <cstdio>

#include "qig/qig.hpp"

using namespace qig;

namespace {

void show(const char* title, const SchurProbeReport& r) {
  std::printf("%-34s pairs %4ld  violations %3ld  worst margin %+.2e (tol %.0e)\n",
              title, r.pairs_tested, r.violations, r.worst_violation, r.tolerance_used);
}

}  // namespace

int main() {
  Rng rng(1);

  const GroupedMeasurement symmetric =
      symmetric_classical_measurement(ProbVector({0.7, 0.2, 0.1}), 3);
  show("symmetric classical, <dS>",
       schur_probe(symmetric, SchurQuantity::entropy_reduction,
                   SpectrumEmbedding::diagonal, 500, 1e-9, rng));
  show("symmetric classical, M",
       schur_probe(symmetric, SchurQuantity::pure_ensemble_mutual_info,
                   SpectrumEmbedding::diagonal, 500, 1e-9, rng));

  const GroupedMeasurement covariant =
      uc_measurement_approx(basis_projector_seed(2), 512, rng);
  show("covariant approx (n=512), <dS>",
       schur_probe(covariant, SchurQuantity::entropy_reduction,
                   SpectrumEmbedding::haar_basis, 200, kUcTolEntropyRank1, rng));
  show("covariant approx (n=512), M",
       schur_probe(covariant, SchurQuantity::pure_ensemble_mutual_info,
                   SpectrumEmbedding::haar_basis, 200, kUcTolMutualInfoD2, rng));

  // A readout that resolves state 0 sharply and state 2 barely at all.
  cmat b0 = cmat::Zero(3, 3), b1 = cmat::Zero(3, 3);
  b0(0, 0) = 1.0;
  b0(1, 1) = std::sqrt(0.5);
  b0(2, 2) = std::sqrt(0.1);
  b1(1, 1) = std::sqrt(0.5);
  b1(2, 2) = std::sqrt(0.9);
  const GroupedMeasurement lopsided = GroupedMeasurement::efficient_from(3, {b0, b1});
  show("lopsided classical, <dS>",
       schur_probe(lopsided, SchurQuantity::entropy_reduction,
                   SpectrumEmbedding::diagonal, 500, 1e-9, rng));
  std::printf("violations above are recorded, not errors: the lopsided readout has\n"
              "no permutation symmetry, so nothing forbids them.\n");
  return 0;
}
