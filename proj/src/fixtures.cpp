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


#include "mpmkit/fixtures.hpp"

#include <cmath>

namespace mpmkit {

HsExpansion pauli_expansion(const SystemLayout& layout, const std::vector<PauliTerm>& terms) {
  HsExpansion e{layout, {}};
  for (const auto& t : terms) {
    const MultiIndex i = pauli_index(layout, std::span<const std::pair<std::string, char>>(t.letters));
    e.coeffs[i] += cplx(t.coeff, 0.0);
  }
  return e;
}

LabeledOperator pauli_operator(const SystemLayout& layout, const std::vector<PauliTerm>& terms) {
  return reconstruct(pauli_expansion(layout, terms), default_basis(layout));
}

namespace fixtures {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Subsystem in(const std::string& l) { return {l, 2, Role::Input}; }
Subsystem out(const std::string& l) { return {l, 2, Role::DualOutput}; }

}  // namespace

Scenario two_plus_one() {
  return Scenario{{qubit_seq("A", 2), qubit_seq("B", 1)}};
}

HsExpansion w_ab_expansion() {
  const SystemLayout layout = two_plus_one().layout();
  const double c = 1.0 / 8.0;
  return pauli_expansion(layout, {{c, {}},
                                  {c * kInvSqrt2, {{"A0", 'x'}, {"A2", 'z'}, {"A3", 'z'}, {"B0", 'z'}}},
                                  {c * kInvSqrt2, {{"A0", 'z'}, {"A2", 'z'}, {"B1", 'z'}}}});
}

LabeledOperator w_ab() {
  const HsExpansion e = w_ab_expansion();
  return reconstruct(e, default_basis(e.layout));
}

Scenario activated() {
  NodeSeq a{"A", {Node{{in("A2"), in("L2")}, {out("A3")}}}};
  return Scenario{{a, qubit_seq("B", 1)}};
}

HsExpansion forwarded_expansion() {
  const SystemLayout layout({in("A2"), out("A3"), in("L2"), in("B0"), out("B1")});
  const double c = 1.0 / 8.0;
  return pauli_expansion(layout, {{c, {}},
                                  {c * kInvSqrt2, {{"A2", 'z'}, {"A3", 'z'}, {"L2", 'x'}, {"B0", 'z'}}},
                                  {c * kInvSqrt2, {{"A2", 'z'}, {"L2", 'z'}, {"B1", 'z'}}}});
}

LabeledOperator forwarded() {
  const HsExpansion e = forwarded_expansion();
  return reconstruct(e, default_basis(e.layout));
}

Scenario ocb_scenario() {
  NodeSeq a{"A", {Node{{in("L2")}, {out("A3")}}}};
  return Scenario{{a, qubit_seq("B", 1)}};
}

HsExpansion ocb_expansion(int sign) {
  const SystemLayout layout({out("A3"), in("L2"), in("B0"), out("B1")});
  const double c = 1.0 / 4.0, s = sign < 0 ? -1.0 : 1.0;
  return pauli_expansion(layout, {{c, {}},
                                  {s * c * kInvSqrt2, {{"A3", 'z'}, {"L2", 'x'}, {"B0", 'z'}}},
                                  {s * c * kInvSqrt2, {{"L2", 'z'}, {"B1", 'z'}}}});
}

LabeledOperator ocb(int sign) {
  const HsExpansion e = ocb_expansion(sign);
  return reconstruct(e, default_basis(e.layout));
}

NodeSeq w_ab_comb(bool swapped) {
  const Scenario s = two_plus_one();
  // Party 0 is A (nodes A(1) = A0A1, A(2) = A2A3), party 1 is B.
  const LinearExtension order = swapped
                                    ? LinearExtension{{0, 0}, {1, 0}, {0, 1}}
                                    : LinearExtension{{0, 1}, {1, 0}, {0, 0}};
  return process_as_comb(s, order);
}

}  // namespace fixtures

}  // namespace mpmkit
