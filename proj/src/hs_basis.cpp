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


#include "mpmkit/hs_basis.hpp"

#include <cmath>

#include "mpmkit/errors.hpp"

namespace mpmkit {

namespace {

// Applies `op` (rows: new mode size, cols: old mode size) along mode `k` of a
// flat tensor with the given mode sizes; last mode fastest.
Eigen::VectorXcd mode_multiply(const Eigen::VectorXcd& t, const std::vector<int>& sizes,
                               std::size_t k, const Eigen::MatrixXcd& op) {
  Eigen::Index outer = 1, inner = 1;
  for (std::size_t q = 0; q < k; ++q) outer *= sizes[q];
  for (std::size_t q = k + 1; q < sizes.size(); ++q) inner *= sizes[q];
  const Eigen::Index n_old = op.cols(), n_new = op.rows();
  Eigen::VectorXcd out(outer * n_new * inner);
  for (Eigen::Index o = 0; o < outer; ++o) {
    Eigen::Map<const Eigen::MatrixXcd> x(t.data() + o * n_old * inner, inner, n_old);
    Eigen::Map<Eigen::MatrixXcd> y(out.data() + o * n_new * inner, inner, n_new);
    y.noalias() = x * op.transpose();
  }
  return out;
}

// Flat tensor over per-factor (row, col) pairs, pair index r_k * d_k + c_k.
Eigen::VectorXcd to_pair_tensor(const Eigen::MatrixXcd& m, const std::vector<int>& dims) {
  const std::size_t n = dims.size();
  const Eigen::Index d = m.rows();
  Eigen::VectorXcd t(d * d);
  std::vector<int> r(n), c(n);
  for (Eigen::Index flat = 0; flat < d * d; ++flat) {
    Eigen::Index rest = flat, row = 0, col = 0, stride = 1;
    for (std::size_t k = n; k-- > 0;) {
      const int pair = static_cast<int>(rest % (dims[k] * dims[k]));
      rest /= dims[k] * dims[k];
      row += (pair / dims[k]) * stride;
      col += (pair % dims[k]) * stride;
      stride *= dims[k];
    }
    t(flat) = m(row, col);
  }
  return t;
}

Eigen::MatrixXcd from_pair_tensor(const Eigen::VectorXcd& t, const std::vector<int>& dims,
                                  Eigen::Index d) {
  const std::size_t n = dims.size();
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index flat = 0; flat < d * d; ++flat) {
    Eigen::Index rest = flat, row = 0, col = 0, stride = 1;
    for (std::size_t k = n; k-- > 0;) {
      const int pair = static_cast<int>(rest % (dims[k] * dims[k]));
      rest /= dims[k] * dims[k];
      row += (pair / dims[k]) * stride;
      col += (pair % dims[k]) * stride;
      stride *= dims[k];
    }
    m(row, col) = t(flat);
  }
  return m;
}

}  // namespace

HsBasis::HsBasis(SystemLayout layout, std::vector<std::vector<Eigen::MatrixXcd>> elements)
    : layout_(std::move(layout)), elements_(std::move(elements)) {
  if (elements_.size() != layout_.size())
    throw LayoutMismatch("basis needs one element list per subsystem");
  for (std::size_t k = 0; k < layout_.size(); ++k) {
    const int d = layout_[k].dim;
    if (static_cast<int>(elements_[k].size()) != d * d)
      throw LayoutMismatch("subsystem '" + layout_[k].label + "' needs d^2 basis elements");
  }
}

std::size_t HsBasis::count() const {
  std::size_t n = 1;
  for (const auto& e : elements_) n *= e.size();
  return n;
}

LabeledOperator HsBasis::product(const MultiIndex& index) const {
  check_index(index);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Ones(1, 1);
  for (std::size_t k = 0; k < index.size(); ++k) {
    Eigen::MatrixXcd next = Eigen::kroneckerProduct(m, elements_[k][index[k]]);
    m = std::move(next);
  }
  return {layout_, std::move(m)};
}

MultiIndex HsBasis::unflatten(std::size_t flat) const {
  MultiIndex index(elements_.size());
  for (std::size_t k = elements_.size(); k-- > 0;) {
    index[k] = static_cast<int>(flat % elements_[k].size());
    flat /= elements_[k].size();
  }
  return index;
}

std::size_t HsBasis::flatten(const MultiIndex& index) const {
  check_index(index);
  std::size_t flat = 0;
  for (std::size_t k = 0; k < index.size(); ++k)
    flat = flat * elements_[k].size() + static_cast<std::size_t>(index[k]);
  return flat;
}

void HsBasis::check_index(const MultiIndex& index) const {
  if (index.size() != elements_.size())
    throw BadIndex("multi-index has " + std::to_string(index.size()) +
                   " components, layout has " + std::to_string(elements_.size()));
  for (std::size_t k = 0; k < index.size(); ++k)
    if (index[k] < 0 || index[k] >= static_cast<int>(elements_[k].size()))
      throw BadIndex("sub-index " + std::to_string(index[k]) + " out of range on '" +
                     layout_[k].label + "'");
}

std::vector<Eigen::MatrixXcd> gell_mann_basis(int d) {
  if (d < 1) throw UnsupportedDimension("dimension must be positive");
  if (d > kMaxBasisDim)
    throw UnsupportedDimension("no basis for dimension " + std::to_string(d));
  const double scale = std::sqrt(d / 2.0);
  const cplx i(0.0, 1.0);
  std::vector<Eigen::MatrixXcd> out;
  out.push_back(Eigen::MatrixXcd::Identity(d, d));
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(d, d);
      s(j, k) = s(k, j) = scale;
      out.push_back(s);
      Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d, d);
      a(j, k) = -i * scale;
      a(k, j) = i * scale;
      out.push_back(a);
    }
  for (int l = 1; l < d; ++l) {
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(d, d);
    const double norm = scale * std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) g(j, j) = norm;
    g(l, l) = -l * norm;
    out.push_back(g);
  }
  return out;
}

HsBasis default_basis(const SystemLayout& layout) {
  std::vector<std::vector<Eigen::MatrixXcd>> elements;
  elements.reserve(layout.size());
  for (const auto& s : layout) elements.push_back(gell_mann_basis(s.dim));
  return {layout, std::move(elements)};
}

HsExpansion expand(const LabeledOperator& m, const HsBasis& basis, double drop_tol) {
  if (!(m.layout() == basis.layout()))
    throw LayoutMismatch("operator and basis layouts differ");
  const std::vector<int> dims = m.layout().dims();
  std::vector<int> sizes;
  for (int d : dims) sizes.push_back(d * d);

  Eigen::VectorXcd t = to_pair_tensor(m.matrix(), dims);
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const int d = dims[k];
    Eigen::MatrixXcd op(d * d, d * d);
    for (int i = 0; i < d * d; ++i)
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) op(i, r * d + c) = std::conj(basis.element(k, i)(r, c));
    t = mode_multiply(t, sizes, k, op);
  }
  t /= static_cast<double>(m.dim());

  HsExpansion e{m.layout(), {}};
  for (Eigen::Index flat = 0; flat < t.size(); ++flat)
    if (std::abs(t(flat)) > drop_tol)
      e.coeffs.emplace(basis.unflatten(static_cast<std::size_t>(flat)), t(flat));
  return e;
}

LabeledOperator reconstruct(const HsExpansion& e, const HsBasis& basis) {
  if (!(e.layout == basis.layout()))
    throw LayoutMismatch("expansion and basis layouts differ");
  const std::vector<int> dims = e.layout.dims();
  std::vector<int> sizes;
  for (int d : dims) sizes.push_back(d * d);

  Eigen::VectorXcd t = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.count()));
  for (const auto& [index, value] : e.coeffs)
    t(static_cast<Eigen::Index>(basis.flatten(index))) += value;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const int d = dims[k];
    Eigen::MatrixXcd op(d * d, d * d);
    for (int i = 0; i < d * d; ++i)
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) op(r * d + c, i) = basis.element(k, i)(r, c);
    t = mode_multiply(t, sizes, k, op);
  }
  return {e.layout, from_pair_tensor(t, dims, e.layout.total_dim())};
}

MultiIndex pauli_index(const SystemLayout& layout,
                       std::span<const std::pair<std::string, char>> letters) {
  MultiIndex index(layout.size(), 0);
  for (const auto& [label, letter] : letters) {
    const std::size_t k = layout.index_of(label);
    if (layout[k].dim != 2)
      throw UnsupportedDimension("Pauli letter on non-qubit '" + label + "'");
    switch (letter) {
      case 'i': case 'I': index[k] = 0; break;
      case 'x': case 'X': index[k] = 1; break;
      case 'y': case 'Y': index[k] = 2; break;
      case 'z': case 'Z': index[k] = 3; break;
      default:
        throw ParseError(std::string("unknown Pauli letter '") + letter + "'");
    }
  }
  return index;
}

}  // namespace mpmkit
