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
#include "mpmkit/link.hpp"
#include "mpmkit/mpm.hpp"
#include "mpmkit/operator.hpp"

namespace mpmkit {

/// Tr[W (M_1 (x) M_2 (x) ...)]. The branches together must cover the systems
/// of `w` (trivial systems aside); order is irrelevant.
double born_probability(const LabeledOperator& w, const std::vector<LabeledOperator>& branches);
/// Same trace without discarding the imaginary part.
cplx born_trace(const LabeledOperator& w, const std::vector<LabeledOperator>& branches);

/// Tr_F[(F (x) 1) W] over the systems of `f`, which must all occur in `w`.
LabeledOperator partial_contract(const LabeledOperator& w, const LabeledOperator& f);

/// CJ operator of rho -> <m|rho|m> |p><p| from `in` to `out`.
LabeledOperator measure_prepare_choi(const SystemLayout& in, const Eigen::VectorXcd& m,
                                     const SystemLayout& out, const Eigen::VectorXcd& p);

/// Labelled outcome branches on the nodes of `seq`.
struct Instrument {
  NodeSeq seq;
  std::vector<std::pair<std::string, LabeledOperator>> branches;

  LabeledOperator total() const;
  /// Every branch PSD, and the branch sum a deterministic comb on `seq`.
  Verdict check(double tol = 1e-9) const;
};

/// Random instrument: a Haar-random isometric network whose final memory is
/// measured in its computational basis and the results binned into
/// `outcomes` classes.
Instrument random_instrument(const NodeSeq& seq, int outcomes, Rng& rng, int ancilla_dim = 2);

/// Side-channel label for gap `k` (1-based, odd = sender, even = receiver).
/// `L{k}` when a single party has gaps, `{party}L{k}` otherwise.
std::string side_channel_label(const Scenario& s, const std::string& party, int k);

/// Inserts an identity channel between consecutive nodes of each party: gap
/// k adds output L_{2k-1} to node k and input L_{2k} to node k+1, and W gets
/// a factor sum_ij |ii><jj| on that pair. `dims` lists one dimension per gap
/// in party order. The result is expressed on the extended scenario layout.
std::pair<LabeledOperator, Scenario> extend_with_side_channels(const LabeledOperator& w,
                                                               const Scenario& s,
                                                               const std::vector<int>& dims);

struct ConditionalPm {
  LabeledOperator w;
  /// Factor c applied to the raw contraction.
  double normalization = 0.0;
  /// Trace of the raw contraction, i.e. before rescaling.
  double raw_trace = 0.0;
};

/// c Tr_F[(F (x) 1) W] with F = `first_op` and c chosen so that the trace
/// equals the output dimension of `remaining`. Throws PostSelectionDetected
/// when the branch has vanishing weight or the result is not a valid MPM on
/// `remaining`.
ConditionalPm conditional_pm_detailed(const LabeledOperator& w, const LabeledOperator& first_op,
                                      const Scenario& remaining, double tol = 1e-9);
LabeledOperator conditional_pm(const LabeledOperator& w, const LabeledOperator& first_op,
                               const Scenario& remaining, double tol = 1e-9);

}  // namespace mpmkit
