// Copyright 2026 The mpmkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mpmkit/comb.hpp"
#include "mpmkit/hs_basis.hpp"
#include "mpmkit/mpm.hpp"

namespace mpmkit {

/// Weighted Pauli string, e.g. {1/(8 sqrt 2), {{"A0",'x'}, {"A2",'z'}}}.
struct PauliTerm {
  double coeff = 0.0;
  std::vector<std::pair<std::string, char>> letters;
};

HsExpansion pauli_expansion(const SystemLayout& layout, const std::vector<PauliTerm>& terms);
LabeledOperator pauli_operator(const SystemLayout& layout, const std::vector<PauliTerm>& terms);

namespace fixtures {

/// Two-node party A (A0 -> A1, A2 -> A3) and one-node party B (B0 -> B1).
Scenario two_plus_one();
/// (1/8)(1 + [A0x A2z A3z B0z + A0z A2z B1z]/sqrt 2) on A0 A1 A2 A3 B0 B1.
HsExpansion w_ab_expansion();
LabeledOperator w_ab();

/// A's second node with inputs A2, L2 and output A3; B as above.
Scenario activated();
/// (1/8)(1 + [A2z A3z L2x B0z + A2z L2z B1z]/sqrt 2) on A2 A3 L2 B0 B1.
HsExpansion forwarded_expansion();
LabeledOperator forwarded();

/// Single-node parties A (L2 -> A3) and B (B0 -> B1).
Scenario ocb_scenario();
/// (1/4)(1 + sign [A3z L2x B0z + L2z B1z]/sqrt 2) on A3 L2 B0 B1.
HsExpansion ocb_expansion(int sign = 1);
LabeledOperator ocb(int sign = 1);

/// Teeth of the fixed order A2 < B < A1 for w_ab (or A1 < B < A2 when
/// `swapped`), with trivial first input and last output.
NodeSeq w_ab_comb(bool swapped = false);

}  // namespace fixtures

}  // namespace mpmkit
