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

#include <complex>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mpmkit/layout.hpp"
#include "mpmkit/operator.hpp"

namespace mpmkit {

/// One sub-index per subsystem, each in [0, d_k^2).
using MultiIndex = std::vector<int>;

/// Product Hilbert-Schmidt basis. Per subsystem, element 0 is the identity and
/// every element is Hermitian with Tr[s_i s_j] = d delta_ij.
class HsBasis {
 public:
  HsBasis() = default;
  HsBasis(SystemLayout layout, std::vector<std::vector<Eigen::MatrixXcd>> elements);

  const SystemLayout& layout() const { return layout_; }
  /// Number of basis elements on subsystem `k` (d_k^2).
  int size(std::size_t k) const { return static_cast<int>(elements_[k].size()); }
  const Eigen::MatrixXcd& element(std::size_t k, int i) const { return elements_[k][i]; }

  /// Total number of product elements.
  std::size_t count() const;
  /// Product element sigma_i (x) ... on the full layout.
  LabeledOperator product(const MultiIndex& index) const;

  MultiIndex unflatten(std::size_t flat) const;
  std::size_t flatten(const MultiIndex& index) const;
  void check_index(const MultiIndex& index) const;

 private:
  SystemLayout layout_;
  std::vector<std::vector<Eigen::MatrixXcd>> elements_;
};

/// Hermitian generalized Gell-Mann basis of one d-level system, rescaled so
/// that Tr[s_i s_j] = d delta_ij. Ordering: identity, then for each pair
/// j < k the symmetric and antisymmetric elements, then the diagonal ones.
/// For d = 2 this is {1, sigma_x, sigma_y, sigma_z}.
std::vector<Eigen::MatrixXcd> gell_mann_basis(int d);

/// Pauli basis on qubits, Gell-Mann elsewhere. Throws UnsupportedDimension
/// above `kMaxBasisDim`.
HsBasis default_basis(const SystemLayout& layout);
inline constexpr int kMaxBasisDim = 16;

/// Sparse coefficient map o_i with M = sum_i o_i sigma_i.
struct HsExpansion {
  SystemLayout layout;
  std::map<MultiIndex, cplx> coeffs;
};

/// coeffs[i] = Tr[sigma_i M] / d. Coefficients with magnitude <= drop_tol
/// are not stored.
HsExpansion expand(const LabeledOperator& m, const HsBasis& basis,
                   double drop_tol = 1e-14);
LabeledOperator reconstruct(const HsExpansion& e, const HsBasis& basis);

/// Multi-index of a Pauli string written as (label, letter) pairs, letters
/// from {i, x, y, z}; unnamed subsystems get the identity.
MultiIndex pauli_index(const SystemLayout& layout,
                       std::span<const std::pair<std::string, char>> letters);

}  // namespace mpmkit
