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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mpmkit/comb.hpp"
#include "mpmkit/layout.hpp"
#include "mpmkit/operator.hpp"
#include "mpmkit/ring.hpp"

namespace mpmkit {

/// Parties with their ordered nodes. Labels are unique across parties.
struct Scenario {
  std::vector<NodeSeq> parties;

  /// Party layouts concatenated in party order. Throws LabelCollision.
  SystemLayout layout() const;
  Eigen::Index input_dim() const;
  Eigen::Index output_dim() const;
  std::size_t node_count() const;
  /// Index of the party called `label`; throws UnknownSubsystem.
  std::size_t party_index(const std::string& label) const;
};

/// Same systems with every node promoted to a party of its own.
Scenario split_nodes(const Scenario& s);

struct NodeRef {
  std::size_t party = 0;
  std::size_t node = 0;
  friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

/// A total order of all nodes that respects each party's local order.
using LinearExtension = std::vector<NodeRef>;

/// Name of a node for display: the party label when it has a single node,
/// otherwise party label followed by the 1-based node number.
std::string node_name(const Scenario& s, const NodeRef& ref);

inline constexpr std::size_t kMaxExtensionNodes = 10;

/// All linear extensions; at each step parties are tried in index order.
/// Throws TooManyNodes above kMaxExtensionNodes nodes.
std::vector<LinearExtension> linear_extensions(const Scenario& s);

/// The nodes of `ext` as one party, in extension order.
NodeSeq chain(const Scenario& s, const LinearExtension& ext);

/// A process on `s` read as a comb whose teeth follow `order`: a trivial
/// input feeds the first node's inputs, each node's outputs feed the next
/// node's inputs, and the last outputs feed a trivial output. Trivial
/// systems are labelled `#in` and `#out`.
NodeSeq process_as_comb(const Scenario& s, const LinearExtension& order);

/// Product of the per-party comb projectors.
RingElement affine_comb_projector(const Scenario& s);
/// 1 - affine_comb_projector + D.
RingElement mpm_projector(const Scenario& s);

/// Positivity, mpm_projector[W] = W, and Tr W = d_out.
Verdict validate_mpm(const LabeledOperator& w, const Scenario& s, double tol = 1e-9);

struct Theorem2Report {
  std::size_t extension_count = 0;
  std::string union_form;
  std::string mpm_form;
  bool equal = false;
  /// P^{X<Y} P^{Y<X} = P^X P^Y for every pair of parties.
  bool lemma2_pairs_hold = true;
};

inline constexpr std::size_t kMaxUnionNodes = 6;

/// Union over all linear extensions of 1 - P^pi + D, compared symbolically
/// with mpm_projector. Throws TooManyNodes above kMaxUnionNodes.
Theorem2Report theorem2_check(const Scenario& s);

/// P^{A<B} built (first) by running the comb recursion over A's nodes then
/// B's, and (second) as P^B - (1 - P^A) D^B.
std::pair<RingElement, RingElement> lemma2_decomposition(const NodeSeq& a, const NodeSeq& b);

/// 1/d_in plus a random traceless Hermitian term projected onto the MPM
/// subspace and rescaled so the smallest eigenvalue stays at least
/// (1 - scale)/d_in. `scale` lies in [0, 1].
LabeledOperator random_valid_mpm(const Scenario& s, Rng& rng, double scale = 0.9);

}  // namespace mpmkit
