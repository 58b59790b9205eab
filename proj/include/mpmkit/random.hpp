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
#include <random>

#include "mpmkit/layout.hpp"
#include "mpmkit/operator.hpp"

namespace mpmkit {

/// Every random routine takes its generator explicitly.
using Rng = std::mt19937_64;

/// Matrix with iid standard complex Gaussian entries.
Eigen::MatrixXcd random_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Hermitian operator from the Gaussian ensemble, entries of order one.
LabeledOperator random_hermitian(const SystemLayout& layout, Rng& rng);

/// Arbitrary (non-Hermitian) complex operator.
LabeledOperator random_operator(const SystemLayout& layout, Rng& rng);

/// Random full-rank density operator (Tr = 1).
LabeledOperator random_density(const SystemLayout& layout, Rng& rng);

/// Haar-random isometry C^din -> C^dout (dout >= din), columns orthonormal.
Eigen::MatrixXcd haar_isometry(Eigen::Index din, Eigen::Index dout, Rng& rng);

}  // namespace mpmkit
