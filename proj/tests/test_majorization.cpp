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

#include "qig/majorization.hpp"

#include <algorithm>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "qig/generate.hpp"

using namespace qig;
using namespace qig::testing;

namespace {

ProbVector permuted(const ProbVector& p, const std::vector<std::size_t>& perm) {
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out[i] = p[perm[i]];
  return ProbVector(std::move(out));
}

double measurement_mutual_info(const Ensemble& eps, const GroupedMeasurement& meas) {
  return mutual_information(outcome_table(eps, meas), eps.probs());
}

}  // namespace

TEST_CASE("majorization predicate", "[majorization]") {
  REQUIRE(majorizes(ProbVector({0.7, 0.3}), ProbVector({0.5, 0.5})));
  REQUIRE_FALSE(majorizes(ProbVector({0.5, 0.5}), ProbVector({0.7, 0.3})));
  SECTION("uniform is majorized by everything") {
    Rng rng(5);
    for (int rep = 0; rep < 20; ++rep) {
      const ProbVector p = random_prob_vector(4, rng);
      REQUIRE(majorizes(p, ProbVector::uniform(4)));
    }
  }
  SECTION("reflexive") {
    Rng rng(6);
    const ProbVector p = random_prob_vector(5, rng);
    REQUIRE(majorizes(p, p));
  }
  SECTION("shorter vectors are zero-padded") {
    REQUIRE(majorizes(ProbVector({1.0}), ProbVector({0.5, 0.5})));
    REQUIRE_FALSE(majorizes(ProbVector({0.5, 0.5}), ProbVector({1.0})));
  }
}

TEST_CASE("majorization order properties on random chains", "[majorization]") {
  Rng rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    const auto [p, q] = random_majorized_pair(4, rng);
    const auto [q2, r] = [&] {
      // Extend the chain one more mixing step from q.
      Rng inner(rng.next_u64());
      std::vector<double> v(4, 0.0);
      const int n_perms = 3;
      const ProbVector w = random_prob_vector(n_perms, inner);
      std::vector<std::size_t> perm{0, 1, 2, 3};
      for (int m = 0; m < n_perms; ++m) {
        inner.shuffle(perm);
        for (std::size_t i = 0; i < 4; ++i) v[i] += w[m] * q[perm[i]];
      }
      return std::make_pair(q, ProbVector(std::move(v)));
    }();
    REQUIRE(majorizes(p, q));
    REQUIRE(majorizes(q2, r));
    REQUIRE(majorizes(p, r));  // transitivity
    // Antisymmetry up to permutation.
    if (majorizes(q, p)) {
      std::vector<double> sp = p.probs(), sq = q.probs();
      std::sort(sp.begin(), sp.end());
      std::sort(sq.begin(), sq.end());
      for (std::size_t i = 0; i < sp.size(); ++i)
        REQUIRE_THAT(sp[i], Catch::Matchers::WithinAbs(sq[i], 1e-10));
    }
    // Majorization orders Shannon entropy.
    REQUIRE(shannon_entropy(p) <= shannon_entropy(q) + 1e-12);
  }
}

TEST_CASE("generated pairs always majorize", "[majorization]") {
  Rng rng(8);
  for (int rep = 0; rep < 1000; ++rep) {
    const auto [p, q] = random_majorized_pair(4, rng);
    REQUIRE(majorizes(p, q));
  }
}

TEST_CASE("permutation mixtures", "[majorization]") {
  SECTION("a single permutation majorizes both ways") {
    Rng rng(9);
    const ProbVector p = random_prob_vector(4, rng);
    const ProbVector q = permuted(p, {2, 0, 3, 1});
    REQUIRE(majorizes(p, q));
    REQUIRE(majorizes(q, p));
  }
  SECTION("the full symmetrization is uniform") {
    const ProbVector p({0.6, 0.3, 0.1});
    std::vector<std::size_t> perm{0, 1, 2};
    std::vector<double> acc(3, 0.0);
    int count = 0;
    std::sort(perm.begin(), perm.end());
    do {
      for (std::size_t i = 0; i < 3; ++i) acc[i] += p[perm[i]];
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (double& x : acc) x /= count;
    for (double x : acc) REQUIRE_THAT(x, Catch::Matchers::WithinAbs(1.0 / 3.0, 1e-12));
  }
}

TEST_CASE("symmetric classical measurement", "[majorization]") {
  SECTION("one-hot kernel gives the basis projectors") {
    const GroupedMeasurement meas =
        symmetric_classical_measurement(ProbVector({1.0, 0.0, 0.0}), 3);
    REQUIRE(meas.group_count() == 3);
    REQUIRE(meas.efficient());
    // Each operator is a basis projector (up to ordering).
    for (const auto& g : meas.groups()) {
      double total = 0.0;
      for (int i = 0; i < 3; ++i) total += std::abs(g[0](i, i));
      REQUIRE_THAT(total, Catch::Matchers::WithinAbs(1.0, 1e-12));
    }
  }
  SECTION("uniform kernel is uninformative") {
    const GroupedMeasurement meas =
        symmetric_classical_measurement(ProbVector::uniform(3), 3);
    REQUIRE(meas.group_count() == 1);
    REQUIRE((meas.group(0)[0] - cmat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
    Rng rng(10);
    const Instance inst = generate_symmetric_classical_instance(ProbVector::uniform(3), rng);
    REQUIRE_THAT(measurement_mutual_info(inst.ensemble, inst.measurement),
                 Catch::Matchers::WithinAbs(0.0, 1e-12));
    REQUIRE_THAT(avg_entropy_reduction(ensemble_state(inst.ensemble), inst.measurement),
                 Catch::Matchers::WithinAbs(0.0, 1e-12));
  }
  SECTION("binary kernel is closed under the swap") {
    const GroupedMeasurement meas =
        symmetric_classical_measurement(ProbVector({0.9, 0.1}), 2);
    REQUIRE(meas.group_count() == 2);
    cmat swap(2, 2);
    swap << 0, 1, 1, 0;
    for (const auto& g : meas.groups()) {
      const cmat conjugated = swap * g[0] * swap.adjoint();
      bool found = false;
      for (const auto& h : meas.groups())
        if ((conjugated - h[0]).cwiseAbs().maxCoeff() < 1e-12) found = true;
      REQUIRE(found);
    }
  }
  SECTION("random kernels stay complete") {
    Rng rng(11);
    for (int d : {2, 3, 4, 5}) {
      const GroupedMeasurement meas =
          symmetric_classical_measurement(random_prob_vector(d, rng), d);
      cmat sum = cmat::Zero(d, d);
      for (const auto& g : meas.groups()) sum += g[0].adjoint() * g[0];
      REQUIRE((sum - cmat::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("approximate unitarily covariant measurement", "[majorization]") {
  Rng rng(12);
  SECTION("identity seed gives operators proportional to identity") {
    const GroupedMeasurement meas = uc_measurement_approx(cmat::Identity(2, 2), 16, rng);
    for (const auto& g : meas.groups()) {
      const cmat& b = g[0];
      const cmat scaled = b / b(0, 0);
      REQUIRE((scaled - cmat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-10);
    }
    const Ensemble eps = eigen_ensemble(random_density(2, rng));
    REQUIRE_THAT(measurement_mutual_info(eps, meas),
                 Catch::Matchers::WithinAbs(0.0, 1e-10));
  }
  SECTION("unitary seed gives constant outcome probabilities") {
    const int n = 32;
    const cmat u = haar_unitary(2, rng);
    const GroupedMeasurement meas = uc_measurement_approx(u, n, rng);
    for (int rep = 0; rep < 3; ++rep) {
      const Ensemble eps(ProbVector({1.0}), {random_density(2, rng)});
      const OutcomeTable t = outcome_table(eps, meas);
      for (double p : t.p_j)
        REQUIRE_THAT(p, Catch::Matchers::WithinAbs(1.0 / n, 1e-10));
    }
  }
  SECTION("completeness is exact for every sample count") {
    for (int n : {4, 9, 64}) {
      const GroupedMeasurement meas =
          uc_measurement_approx(basis_projector_seed(2), std::max(n, 4), rng);
      cmat sum = cmat::Zero(2, 2);
      for (const auto& g : meas.groups()) sum += g[0].adjoint() * g[0];
      REQUIRE((sum - cmat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
  SECTION("too few samples rejected") {
    REQUIRE_THROWS_AS(uc_measurement_approx(basis_projector_seed(3), 8, rng),
                      invariant_error);
  }
}

TEST_CASE("measurement mixtures", "[majorization]") {
  Rng rng(13);
  SECTION("a weight-1 mixture has identical statistics") {
    const GroupedMeasurement base =
        GroupedMeasurement::efficient_from(2, random_kraus_set(2, 3, rng));
    const GroupedMeasurement mix = mix_measurements({base}, ProbVector({1.0}));
    const Ensemble eps = random_ensemble(2, 2, rng);
    const OutcomeTable ta = outcome_table(eps, base);
    const OutcomeTable tb = outcome_table(eps, mix);
    for (std::size_t j = 0; j < ta.p_j.size(); ++j)
      REQUIRE_THAT(tb.p_j[j], Catch::Matchers::WithinAbs(ta.p_j[j], 1e-12));
  }
  SECTION("mixing two projective measurements averages outcome probabilities") {
    const GroupedMeasurement zx =
        mix_measurements({projective_z(), GroupedMeasurement::efficient_from(2, x_projectors())},
                         ProbVector({0.5, 0.5}));
    const Ensemble eps(ProbVector({1.0}), {ket0()});
    const OutcomeTable t = outcome_table(eps, zx);
    REQUIRE(t.p_j.size() == 4);
    REQUIRE_THAT(t.p_j[0], Catch::Matchers::WithinAbs(0.5, 1e-12));   // Z outcome 0
    REQUIRE_THAT(t.p_j[1], Catch::Matchers::WithinAbs(0.0, 1e-12));   // Z outcome 1
    REQUIRE_THAT(t.p_j[2], Catch::Matchers::WithinAbs(0.25, 1e-12));  // X outcome +
    REQUIRE_THAT(t.p_j[3], Catch::Matchers::WithinAbs(0.25, 1e-12));  // X outcome -
  }
  SECTION("mutual information of a mixture is the weighted combination") {
    for (int rep = 0; rep < 5; ++rep) {
      const Ensemble eps = random_ensemble(2, 3, rng);
      std::vector<GroupedMeasurement> parts;
      parts.push_back(GroupedMeasurement::efficient_from(2, random_kraus_set(2, 3, rng)));
      parts.push_back(GroupedMeasurement::efficient_from(2, random_kraus_set(2, 2, rng)));
      const ProbVector w = random_prob_vector(2, rng);
      const GroupedMeasurement mixed = mix_measurements(parts, w);
      const double lhs = measurement_mutual_info(eps, mixed);
      const double rhs = w[0] * measurement_mutual_info(eps, parts[0]) +
                         w[1] * measurement_mutual_info(eps, parts[1]);
      REQUIRE_THAT(lhs, Catch::Matchers::WithinAbs(rhs, 1e-10));
    }
  }
  SECTION("dimension mismatch rejected") {
    REQUIRE_THROWS_AS(
        mix_measurements({projective_z(2), projective_z(3)}, ProbVector({0.5, 0.5})),
        invariant_error);
  }
}

TEST_CASE("eigen ensemble", "[majorization]") {
  Rng rng(14);
  SECTION("pure states give a single entry") {
    const Ensemble eps = eigen_ensemble(ket_plus());
    REQUIRE(eps.size() == 1);
    REQUIRE_THAT(eps.prob(0), Catch::Matchers::WithinAbs(1.0, 1e-10));
  }
  SECTION("the maximally mixed qubit splits into two orthogonal halves") {
    const Ensemble eps = eigen_ensemble(DensityMatrix::maximally_mixed(2));
    REQUIRE(eps.size() == 2);
    REQUIRE_THAT(eps.prob(0), Catch::Matchers::WithinAbs(0.5, 1e-12));
    REQUIRE(std::abs((eps.state(0).matrix() * eps.state(1).matrix()).trace()) < 1e-12);
  }
  SECTION("reconstruction") {
    for (int d : {2, 3, 4}) {
      const DensityMatrix rho = random_density(d, rng);
      REQUIRE((ensemble_state(eigen_ensemble(rho)).matrix() - rho.matrix())
                  .cwiseAbs()
                  .maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("schur probe on symmetric classical measurements", "[majorization]") {
  Rng rng(15);
  const GroupedMeasurement meas =
      symmetric_classical_measurement(ProbVector({0.7, 0.2, 0.1}), 3);
  SECTION("entropy reduction sees no violations") {
    const SchurProbeReport r =
        schur_probe(meas, SchurQuantity::entropy_reduction, SpectrumEmbedding::diagonal,
                    100, 1e-9, rng);
    REQUIRE(r.pairs_tested == 100);
    REQUIRE(r.violations == 0);
    REQUIRE(r.worst_violation >= -1e-9);
  }
  SECTION("pure-ensemble mutual information sees no violations") {
    const SchurProbeReport r =
        schur_probe(meas, SchurQuantity::pure_ensemble_mutual_info,
                    SpectrumEmbedding::diagonal, 100, 1e-9, rng);
    REQUIRE(r.violations == 0);
  }
  SECTION("inefficient measurements are rejected") {
    REQUIRE_THROWS_AS(schur_probe(meas.merged(), SchurQuantity::entropy_reduction,
                                  SpectrumEmbedding::diagonal, 10, 1e-9, rng),
                      invariant_error);
  }
}

TEST_CASE("schur probe records violations of asymmetric measurements", "[majorization]") {
  // Asymmetric classical readout: distinguishes state 0 perfectly, state 1
  // hardly at all. Violations are data, not failures.
  cmat a0 = cmat::Zero(2, 2), a1 = cmat::Zero(2, 2);
  a0(0, 0) = 1.0;
  a0(1, 1) = std::sqrt(0.3);
  a1(1, 1) = std::sqrt(0.7);
  const GroupedMeasurement meas = GroupedMeasurement::efficient_from(2, {a0, a1});
  Rng rng(16);
  const SchurProbeReport r = schur_probe(meas, SchurQuantity::entropy_reduction,
                                         SpectrumEmbedding::diagonal, 200, 1e-9, rng);
  REQUIRE(r.pairs_tested == 200);
  REQUIRE(r.violations >= 0);
}

TEST_CASE("uc probes at loose structural tolerance", "[majorization]") {
  Rng rng(17);
  const GroupedMeasurement meas =
      uc_measurement_approx(basis_projector_seed(2), 64, rng);
  const SchurProbeReport r =
      schur_probe(meas, SchurQuantity::entropy_reduction, SpectrumEmbedding::haar_basis,
                  50, 0.2, rng);
  REQUIRE(r.violations == 0);
  const UcDrift drift = uc_rotation_drift(meas, 5, 3, rng);
  REQUIRE(drift.entropy_reduction < 0.2);
  REQUIRE(drift.mutual_info < 0.5);
}
