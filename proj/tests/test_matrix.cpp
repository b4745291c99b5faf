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

#include "qig/matrix.hpp"

#include <cmath>
#include <complex>

#include <catch2/catch_amalgamated.hpp>

#include "qig/rng.hpp"

using namespace qig;

namespace {

// Test-local scalar oracle, independent of the clamping logic in the
// library path.
double entropy_oracle(std::initializer_list<double> ps) {
  double h = 0.0;
  for (double p : ps)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

cmat random_hermitian(int d, Rng& rng) {
  const cmat g = ginibre(d, d, rng);
  return (g + g.adjoint()) / 2.0;
}

}  // namespace

TEST_CASE("eigh solves textbook spectra", "[matrix]") {
  SECTION("identity") {
    const auto [w, v] = eigh(cmat::Identity(3, 3));
    for (int k = 0; k < 3; ++k) REQUIRE_THAT(w[k], Catch::Matchers::WithinAbs(1.0, 1e-12));
  }
  SECTION("already diagonal") {
    cmat m = cmat::Zero(2, 2);
    m(0, 0) = 0.3;
    m(1, 1) = 0.7;
    const auto [w, v] = eigh(m);
    REQUIRE_THAT(w[0], Catch::Matchers::WithinAbs(0.3, 1e-12));
    REQUIRE_THAT(w[1], Catch::Matchers::WithinAbs(0.7, 1e-12));
  }
  SECTION("Pauli X") {
    cmat x(2, 2);
    x << 0, 1, 1, 0;
    const auto [w, v] = eigh(x);
    REQUIRE_THAT(w[0], Catch::Matchers::WithinAbs(-1.0, 1e-12));
    REQUIRE_THAT(w[1], Catch::Matchers::WithinAbs(1.0, 1e-12));
    // Eigenvectors are (|0> -+ |1>)/sqrt(2) up to phase.
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int k = 0; k < 2; ++k) {
      REQUIRE_THAT(std::abs(v(0, k)), Catch::Matchers::WithinAbs(inv_sqrt2, 1e-12));
      REQUIRE_THAT(std::abs(v(1, k)), Catch::Matchers::WithinAbs(inv_sqrt2, 1e-12));
      REQUIRE((x * v.col(k) - w[k] * v.col(k)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("eigh rejects invalid input", "[matrix]") {
  REQUIRE_THROWS_AS(eigh(cmat::Zero(2, 3)), invariant_error);
  cmat m(2, 2);
  m << 1.0, complex(0.5, 0.1), complex(0.5, 0.1), 1.0;  // equal off-diagonals: not Hermitian
  REQUIRE_THROWS_AS(eigh(m), invariant_error);
}

TEST_CASE("eigh reconstructs random Hermitian matrices up to d = 16", "[matrix]") {
  Rng rng(11);
  for (int d : {2, 3, 5, 8, 16}) {
    for (int rep = 0; rep < 8; ++rep) {
      const cmat h = random_hermitian(d, rng);
      const auto [w, v] = eigh(h);
      const cmat recon = v * w.asDiagonal() * v.adjoint();
      REQUIRE((recon - h).cwiseAbs().maxCoeff() < 1e-9);
      REQUIRE((v.adjoint() * v - cmat::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-9);
      for (int k = 1; k < d; ++k) REQUIRE(w[k - 1] <= w[k]);
    }
  }
}

TEST_CASE("von Neumann entropy", "[matrix]") {
  SECTION("pure states have zero entropy") {
    Rng rng(3);
    for (int d : {2, 3, 4}) {
      const cvec psi = ginibre(d, 1, rng).col(0);
      REQUIRE_THAT(von_neumann_entropy(DensityMatrix::pure(psi)),
                   Catch::Matchers::WithinAbs(0.0, 1e-12));
    }
  }
  SECTION("maximally mixed qubit carries one bit") {
    REQUIRE_THAT(von_neumann_entropy(DensityMatrix::maximally_mixed(2)),
                 Catch::Matchers::WithinAbs(1.0, 1e-12));
  }
  SECTION("frozen scalar value") {
    cmat m = cmat::Zero(2, 2);
    m(0, 0) = 0.853553;
    m(1, 1) = 0.146447;
    const double s = von_neumann_entropy(DensityMatrix(m));
    REQUIRE_THAT(s, Catch::Matchers::WithinAbs(0.6008770300123106, 1e-4));
    REQUIRE_THAT(s, Catch::Matchers::WithinAbs(entropy_oracle({0.853553, 0.146447}), 1e-12));
  }
}

TEST_CASE("Shannon entropy", "[matrix]") {
  REQUIRE_THAT(shannon_entropy(ProbVector({1.0, 0.0})), Catch::Matchers::WithinAbs(0.0, 1e-15));
  REQUIRE_THAT(shannon_entropy(ProbVector({0.5, 0.5})), Catch::Matchers::WithinAbs(1.0, 1e-15));
  REQUIRE_THAT(shannon_entropy(ProbVector({0.25, 0.25, 0.25, 0.25})),
               Catch::Matchers::WithinAbs(2.0, 1e-15));
  REQUIRE_THROWS_AS(ProbVector({0.6, -0.1, 0.5}), invariant_error);
  REQUIRE_THROWS_AS(ProbVector({0.4, 0.4}), invariant_error);
}

TEST_CASE("tensor product", "[matrix]") {
  SECTION("identity blocks") {
    REQUIRE((tensor(cmat::Identity(2, 2), cmat::Identity(2, 2)) - cmat::Identity(4, 4))
                .cwiseAbs()
                .maxCoeff() < 1e-15);
  }
  SECTION("basis bookkeeping") {
    cmat a = cmat::Zero(2, 2), b = cmat::Zero(2, 2);
    a(0, 0) = 1.0;
    b(1, 1) = 1.0;
    const cmat t = tensor(a, b);
    for (int k = 0; k < 4; ++k)
      REQUIRE_THAT(t(k, k).real(), Catch::Matchers::WithinAbs(k == 1 ? 1.0 : 0.0, 1e-15));
  }
  SECTION("trace is multiplicative") {
    Rng rng(5);
    const cmat a = ginibre(3, 3, rng);
    const cmat b = ginibre(2, 2, rng);
    const complex lhs = tensor(a, b).trace();
    const complex rhs = a.trace() * b.trace();
    REQUIRE(std::abs(lhs - rhs) < 1e-12);
  }
  SECTION("associative up to roundoff") {
    Rng rng(6);
    const cmat a = ginibre(2, 2, rng), b = ginibre(2, 2, rng), c = ginibre(2, 2, rng);
    REQUIRE((tensor(tensor(a, b), c) - tensor(a, tensor(b, c))).cwiseAbs().maxCoeff() <
            1e-12);
  }
}

TEST_CASE("partial trace", "[matrix]") {
  Rng rng(7);
  SECTION("product states factor") {
    const DensityMatrix rho_a = random_density(2, rng);
    const DensityMatrix rho_b = random_density(3, rng);
    const DensityMatrix joint = DensityMatrix(tensor(rho_a.matrix(), rho_b.matrix()));
    REQUIRE((partial_trace(joint, 2, 3, Subsystem::a).matrix() - rho_a.matrix())
                .cwiseAbs()
                .maxCoeff() < 1e-10);
    REQUIRE((partial_trace(joint, 2, 3, Subsystem::b).matrix() - rho_b.matrix())
                .cwiseAbs()
                .maxCoeff() < 1e-10);
  }
  SECTION("maximally entangled pair reduces to I/2") {
    cvec bell = cvec::Zero(4);
    bell[0] = 1.0 / std::sqrt(2.0);
    bell[3] = 1.0 / std::sqrt(2.0);
    const DensityMatrix reduced = partial_trace(DensityMatrix::pure(bell), 2, 2, Subsystem::a);
    REQUIRE((reduced.matrix() - cmat::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() < 1e-12);
  }
  SECTION("trace preservation on random bipartite states") {
    for (int rep = 0; rep < 5; ++rep) {
      const DensityMatrix joint = random_density(6, rng);
      const DensityMatrix kept = partial_trace(joint, 2, 3, Subsystem::b);
      REQUIRE_THAT(kept.matrix().trace().real(), Catch::Matchers::WithinAbs(1.0, 1e-10));
    }
  }
  SECTION("dimension mismatch") {
    REQUIRE_THROWS_AS(partial_trace(random_density(6, rng), 2, 2, Subsystem::a),
                      invariant_error);
  }
  SECTION("entropy agrees directly and through a product extension") {
    for (int rep = 0; rep < 5; ++rep) {
      const DensityMatrix rho_a = random_density(3, rng);
      const DensityMatrix rho_b = random_density(2, rng);
      const DensityMatrix joint = DensityMatrix(tensor(rho_a.matrix(), rho_b.matrix()));
      const double direct = von_neumann_entropy(rho_a);
      const double via_trace = von_neumann_entropy(partial_trace(joint, 3, 2, Subsystem::a));
      REQUIRE_THAT(via_trace, Catch::Matchers::WithinAbs(direct, 1e-9));
    }
  }
}

TEST_CASE("density matrix invariants", "[matrix]") {
  SECTION("non-Hermitian rejected") {
    cmat m(2, 2);
    m << 0.5, complex(0.1, 0.2), complex(0.1, 0.2), 0.5;
    REQUIRE_THROWS_AS(DensityMatrix(m), invariant_error);
  }
  SECTION("wrong trace rejected") {
    REQUIRE_THROWS_AS(DensityMatrix(cmat::Identity(2, 2)), invariant_error);
  }
  SECTION("negative eigenvalue rejected") {
    cmat m = cmat::Zero(2, 2);
    m(0, 0) = 1.1;
    m(1, 1) = -0.1;
    REQUIRE_THROWS_AS(DensityMatrix(m), invariant_error);
  }
  SECTION("eigenvalues in the clamp band read as zero") {
    cmat m = cmat::Zero(2, 2);
    m(0, 0) = 1.0 + 0.5e-10;
    m(1, 1) = -0.5e-10;
    const DensityMatrix rho(m);
    REQUIRE(rho.spectrum()[0] == 0.0);
    REQUIRE(std::isfinite(von_neumann_entropy(rho)));
  }
}

TEST_CASE("entropy is invariant under unitary conjugation", "[matrix]") {
  Rng rng(13);
  for (int d : {2, 3, 4}) {
    const DensityMatrix rho = random_density(d, rng);
    const cmat u = haar_unitary(d, rng);
    const DensityMatrix rotated(u * rho.matrix() * u.adjoint());
    REQUIRE_THAT(von_neumann_entropy(rotated),
                 Catch::Matchers::WithinAbs(von_neumann_entropy(rho), 1e-9));
  }
}

TEST_CASE("hermitian inverse square root", "[matrix]") {
  Rng rng(17);
  const cmat g = ginibre(3, 3, rng);
  const cmat s = g * g.adjoint() + 0.1 * cmat::Identity(3, 3);
  const cmat w = hermitian_inverse_sqrt(s);
  REQUIRE((w * s * w - cmat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-10);
  REQUIRE_THROWS_AS(hermitian_inverse_sqrt(cmat::Zero(2, 2)), singular_error);
}
