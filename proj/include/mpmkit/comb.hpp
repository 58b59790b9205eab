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
#include <optional>
#include <string>
#include <vector>

#include "mpmkit/layout.hpp"
#include "mpmkit/operator.hpp"
#include "mpmkit/ring.hpp"

namespace mpmkit {

/// One quantum node. A node usually has one input and one dual-output
/// system; after side-channel extension it may carry several of each, and
/// trivial ends are dim-1 systems.
struct Node {
  std::vector<Subsystem> inputs;
  std::vector<Subsystem> outputs;

  std::vector<std::string> input_labels() const;
  std::vector<std::string> output_labels() const;
  Eigen::Index input_dim() const;
  Eigen::Index output_dim() const;
};

/// Single-system node with roles filled in.
Node make_node(std::string in, int din, std::string out, int dout);

/// The ordered nodes of one party.
struct NodeSeq {
  std::string party;
  std::vector<Node> nodes;

  /// Inputs then outputs of node 0, then node 1, and so on. Throws
  /// LabelCollision on duplicates.
  SystemLayout layout() const;
  Eigen::Index input_dim() const;
  Eigen::Index output_dim() const;
};

/// Party `party` with `n` qubit nodes labelled party0 ... party{2n-1}.
NodeSeq qubit_seq(const std::string& party, int n, int dim = 2);

/// P_0 = 1, P_j = 1 - Out_j + In_j Out_j P_{j-1}; a group of systems acts as
/// the product of its generators.
RingElement comb_projector(const NodeSeq& seq);
/// Same element from the flattened form E_0 = 1 - X_0, E_k = 1 - X_k E_{k-1}
/// over the tooth sequence X_0 X_1 ... (inputs and outputs alternating).
RingElement comb_projector_unravelled(const NodeSeq& seq);

struct Check {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

struct Verdict {
  bool valid = true;
  std::vector<Check> checks;

  void add(std::string name, double residual, bool pass);
  const Check* find(const std::string& name) const;
};

/// Hermiticity and -lambda_min folded into one residual.
Check positivity_check(const LabeledOperator& m, double tol);

/// Positivity, each telescoping marginal Tr_out[M^(j)] = 1_in (x) M^(j-1),
/// and M^(0) = 1. Throws LayoutMismatch when `m` is not on seq's systems.
Verdict validate_comb_trace(const LabeledOperator& m, const NodeSeq& seq, double tol = 1e-9);
/// Positivity, P[M] = M for the comb projector, and Tr M = prod d_in.
Verdict validate_comb_projective(const LabeledOperator& m, const NodeSeq& seq,
                                 double tol = 1e-9);

enum class CombMode { Perturbation, Network };

struct RandomCombOptions {
  CombMode mode = CombMode::Perturbation;
  /// Initial perturbation weight; 0 yields 1/d_out.
  double scale = 1.0;
  /// Memory dimension between consecutive channels (network mode).
  int ancilla_dim = 2;
};

/// Random deterministic comb on seq.layout(). Perturbation mode adds a
/// projected random traceless term to 1/d_out and halves it until PSD;
/// network mode links Haar-random isometries through ancilla memories.
LabeledOperator random_comb(const NodeSeq& seq, std::uint64_t seed,
                            const RandomCombOptions& options = {});
LabeledOperator random_comb(const NodeSeq& seq, Rng& rng,
                            const RandomCombOptions& options = {});

/// Network-mode comb before the final memory is discarded. The memory is the
/// last factor of the returned layout; its dimension is at least
/// `ancilla_dim`.
LabeledOperator random_network_with_memory(const NodeSeq& seq, Rng& rng, int ancilla_dim = 2);

}  // namespace mpmkit
