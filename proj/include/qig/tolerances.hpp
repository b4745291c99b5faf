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

namespace qig::tol {

// Type invariants (entrywise unless noted).
inline constexpr double hermitian = 1e-10;         // max |M - M†|
inline constexpr double trace_one = 1e-10;         // |Tr - 1|
inline constexpr double eigenvalue_floor = -1e-10; // states below this are invalid;
                                                   // values in [floor, 0] clamp to 0
inline constexpr double completeness = 1e-10;      // max |Σ A†A - I|
inline constexpr double prob_sum = 1e-10;          // |Σ p - 1| for probability vectors
inline constexpr double table_sum = 1e-9;          // outcome-table normalization
inline constexpr double table_entry_floor = -1e-12;// probabilities below this are invalid;
                                                   // values in [floor, 0] clamp to 0

// Conditioning.
inline constexpr double zero_prob = 1e-12;         // outcomes below this are impossible
inline constexpr double singular_floor = 1e-12;    // eigenvalue floor for S^{-1/2}

// Information quantities, all in bits.
inline constexpr double gap = 1e-9;                // slack for certified inequalities
inline constexpr double identity_check = 1e-8;     // identities that stack two eigh calls
inline constexpr double cross_check = 1e-10;       // dual-route equalities
inline constexpr double classical_equality = 1e-10;// M = <dS> on classical embeddings

// Majorization.
inline constexpr double majorize_prefix = 1e-12;   // prefix-sum dominance slack
inline constexpr double majorize_total = 1e-10;    // total-mass agreement

}  // namespace qig::tol
