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

#include "mpmkit/layout.hpp"
#include "mpmkit/operator.hpp"

namespace mpmkit {

/// Pairs (label in the first operand, label in the second operand) that are
/// contracted as mutually dual systems.
using DualPairing = std::vector<std::pair<std::string, std::string>>;

/// L = Tr_{BB*}[(M (x) N)(1 (x) Id^{BB*})] with Id = sum_ij |ii><jj|. The
/// result lists the unpaired systems of `m` then those of `n`.
LabeledOperator link_product(const LabeledOperator& m, const LabeledOperator& n,
                             const DualPairing& pairing);

/// sum_ij |ii><jj| on (a, b): the CJ operator of the identity channel.
LabeledOperator identity_link(const Subsystem& a, const Subsystem& b);

/// CJ operator of rho -> V rho V^dag on the layout (input, output), where
/// `v` maps input to output.
LabeledOperator isometry_choi(const Eigen::MatrixXcd& v, const SystemLayout& input,
                              const SystemLayout& output);

/// CJ operator of a preparation of `rho` (no input).
LabeledOperator state_choi(const Eigen::MatrixXcd& rho, const SystemLayout& output);

}  // namespace mpmkit
