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

#include <initializer_list>
#include <vector>

#include "qig/channel.hpp"
#include "qig/matrix.hpp"

namespace qig::testing {

inline DensityMatrix ket0() {
  cmat m = cmat::Zero(2, 2);
  m(0, 0) = 1.0;
  return DensityMatrix(std::move(m));
}

inline DensityMatrix ket1() {
  cmat m = cmat::Zero(2, 2);
  m(1, 1) = 1.0;
  return DensityMatrix(std::move(m));
}

// |+><+| with exactly representable entries.
inline DensityMatrix ket_plus() {
  cmat m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  return DensityMatrix(std::move(m));
}

inline cmat basis_projector(int d, int k) {
  cmat m = cmat::Zero(d, d);
  m(k, k) = 1.0;
  return m;
}

// Projective measurement in the computational basis, singleton groups.
inline GroupedMeasurement projective_z(int d = 2) {
  std::vector<cmat> ops;
  for (int k = 0; k < d; ++k) ops.push_back(basis_projector(d, k));
  return GroupedMeasurement::efficient_from(d, ops);
}

// X-basis projectors |+><+| and |-><-| with exact entries.
inline std::vector<cmat> x_projectors() {
  cmat plus(2, 2), minus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  minus << 0.5, -0.5, -0.5, 0.5;
  return {plus, minus};
}

inline GroupedMeasurement identity_measurement(int d) {
  return GroupedMeasurement(d, {{cmat::Identity(d, d)}});
}

// Shannon entropy oracle on raw values, independent of library clamping.
inline double entropy_oracle(const std::vector<double>& ps) {
  double h = 0.0;
  for (double p : ps)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

}  // namespace qig::testing
