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

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "mpmkit/errors.hpp"
#include "mpmkit/layout.hpp"

namespace mpmkit {

using cplx = std::complex<double>;

/// Dense square operator on a labelled tensor-product space. Values are
/// immutable after construction; the matrix index order follows the layout.
template <typename Scalar>
class BasicOperator {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using RealScalar = typename Eigen::NumTraits<Scalar>::Real;

  BasicOperator() : matrix_(Matrix::Ones(1, 1)) {}

  BasicOperator(SystemLayout layout, Matrix matrix)
      : layout_(std::move(layout)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != layout_.total_dim() || matrix_.cols() != layout_.total_dim())
      throw LayoutMismatch("matrix is " + std::to_string(matrix_.rows()) + "x" +
                           std::to_string(matrix_.cols()) + " but layout has dim " +
                           std::to_string(layout_.total_dim()));
  }

  static BasicOperator identity(SystemLayout layout) {
    const auto d = layout.total_dim();
    return BasicOperator(std::move(layout), Matrix::Identity(d, d));
  }

  static BasicOperator zero(SystemLayout layout) {
    const auto d = layout.total_dim();
    return BasicOperator(std::move(layout), Matrix::Zero(d, d));
  }

  const SystemLayout& layout() const { return layout_; }
  const Matrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }

  BasicOperator adjoint() const { return {layout_, matrix_.adjoint()}; }

  friend BasicOperator operator+(const BasicOperator& a, const BasicOperator& b) {
    a.require_same_layout(b);
    return {a.layout_, a.matrix_ + b.matrix_};
  }
  friend BasicOperator operator-(const BasicOperator& a, const BasicOperator& b) {
    a.require_same_layout(b);
    return {a.layout_, a.matrix_ - b.matrix_};
  }
  friend BasicOperator operator*(Scalar s, const BasicOperator& a) {
    return {a.layout_, s * a.matrix_};
  }
  friend BasicOperator operator*(const BasicOperator& a, Scalar s) { return s * a; }
  /// Operator product on a shared layout.
  friend BasicOperator operator*(const BasicOperator& a, const BasicOperator& b) {
    a.require_same_layout(b);
    return {a.layout_, a.matrix_ * b.matrix_};
  }

 private:
  void require_same_layout(const BasicOperator& other) const {
    if (!(layout_ == other.layout_))
      throw LayoutMismatch("operands are defined on different layouts");
  }

  SystemLayout layout_;
  Matrix matrix_;
};

using LabeledOperator = BasicOperator<cplx>;

/// Kronecker product with a's factors first.
template <typename Scalar>
BasicOperator<Scalar> tensor(const BasicOperator<Scalar>& a,
                             const BasicOperator<Scalar>& b) {
  SystemLayout layout = a.layout().concat(b.layout());
  typename BasicOperator<Scalar>::Matrix k =
      Eigen::kroneckerProduct(a.matrix(), b.matrix());
  return {std::move(layout), std::move(k)};
}

template <typename Scalar>
Scalar trace(const BasicOperator<Scalar>& m) {
  return m.matrix().trace();
}

/// Tr[a^dagger b].
template <typename Scalar>
Scalar hs_inner(const BasicOperator<Scalar>& a, const BasicOperator<Scalar>& b) {
  if (!(a.layout() == b.layout()))
    throw LayoutMismatch("hs_inner requires identical layouts");
  if constexpr (Eigen::NumTraits<Scalar>::IsComplex)
    return a.matrix().conjugate().cwiseProduct(b.matrix()).sum();
  else
    return a.matrix().cwiseProduct(b.matrix()).sum();
}

/// Same operator with its factors permuted into `order`.
template <typename Scalar>
BasicOperator<Scalar> reorder(const BasicOperator<Scalar>& m,
                              std::span<const std::string> order) {
  const SystemLayout& from = m.layout();
  if (order.size() != from.size())
    throw LayoutMismatch("reorder needs every label of the operator exactly once");
  std::vector<std::size_t> positions;
  positions.reserve(order.size());
  for (const auto& l : order) positions.push_back(from.index_of(l));
  SystemLayout to = from.select(order);
  if (to == from) return m;

  const std::vector<int> dims = from.dims();
  const auto map = detail::factor_offsets(dims, positions);
  const Eigen::Index d = m.dim();
  typename BasicOperator<Scalar>::Matrix out(d, d);
  for (Eigen::Index c = 0; c < d; ++c)
    for (Eigen::Index r = 0; r < d; ++r) out(r, c) = m.matrix()(map[r], map[c]);
  return {std::move(to), std::move(out)};
}

/// `m` with its factors put in the order of `target` (same label set).
template <typename Scalar>
BasicOperator<Scalar> reorder_like(const BasicOperator<Scalar>& m,
                                   const SystemLayout& target) {
  if (!m.layout().same_systems(target))
    throw LayoutMismatch("operators act on different subsystems");
  const auto labels = target.labels();
  return reorder(m, std::span<const std::string>(labels));
}

/// Partial trace over the listed labels; the survivors keep their order.
template <typename Scalar>
BasicOperator<Scalar> partial_trace(const BasicOperator<Scalar>& m,
                                    std::span<const std::string> over) {
  const SystemLayout& layout = m.layout();
  std::vector<std::size_t> traced;
  for (const auto& l : over) {
    const std::size_t p = layout.index_of(l);
    if (std::find(traced.begin(), traced.end(), p) == traced.end()) traced.push_back(p);
  }
  std::sort(traced.begin(), traced.end());
  const auto kept = detail::complement(layout.size(), traced);
  const std::vector<int> dims = layout.dims();
  const auto kept_off = detail::factor_offsets(dims, kept);
  const auto traced_off = detail::factor_offsets(dims, traced);

  const auto dk = static_cast<Eigen::Index>(kept_off.size());
  typename BasicOperator<Scalar>::Matrix out =
      BasicOperator<Scalar>::Matrix::Zero(dk, dk);
  const auto& src = m.matrix();
  for (Eigen::Index c = 0; c < dk; ++c)
    for (Eigen::Index r = 0; r < dk; ++r) {
      Scalar acc(0);
      for (Eigen::Index t : traced_off) acc += src(kept_off[r] + t, kept_off[c] + t);
      out(r, c) = acc;
    }

  std::vector<Subsystem> survivors;
  for (std::size_t p : kept) survivors.push_back(layout[p]);
  return {SystemLayout(std::move(survivors)), std::move(out)};
}

template <typename Scalar>
BasicOperator<Scalar> partial_trace(const BasicOperator<Scalar>& m,
                                    std::initializer_list<std::string> over) {
  std::vector<std::string> v(over);
  return partial_trace(m, std::span<const std::string>(v));
}

/// Tr_S[m] (x) 1_S / d_S, written back onto the layout of `m`.
template <typename Scalar>
BasicOperator<Scalar> depolarize(const BasicOperator<Scalar>& m,
                                 std::span<const std::string> over) {
  const SystemLayout& layout = m.layout();
  std::vector<std::size_t> traced;
  for (const auto& l : over) {
    const std::size_t p = layout.index_of(l);
    if (std::find(traced.begin(), traced.end(), p) == traced.end()) traced.push_back(p);
  }
  if (traced.empty()) return m;
  std::sort(traced.begin(), traced.end());
  const auto kept = detail::complement(layout.size(), traced);
  const std::vector<int> dims = layout.dims();
  const auto kept_off = detail::factor_offsets(dims, kept);
  const auto traced_off = detail::factor_offsets(dims, traced);
  const auto dk = static_cast<Eigen::Index>(kept_off.size());
  const typename BasicOperator<Scalar>::RealScalar inv_dt = 1.0 / static_cast<double>(traced_off.size());

  const auto& src = m.matrix();
  typename BasicOperator<Scalar>::Matrix out =
      BasicOperator<Scalar>::Matrix::Zero(m.dim(), m.dim());
  for (Eigen::Index c = 0; c < dk; ++c)
    for (Eigen::Index r = 0; r < dk; ++r) {
      Scalar acc(0);
      for (Eigen::Index t : traced_off) acc += src(kept_off[r] + t, kept_off[c] + t);
      acc *= inv_dt;
      for (Eigen::Index t : traced_off) out(kept_off[r] + t, kept_off[c] + t) = acc;
    }
  return {layout, std::move(out)};
}

template <typename Scalar>
double frobenius_norm(const BasicOperator<Scalar>& m) {
  return static_cast<double>(m.matrix().norm());
}

/// ||a - b||_F / max(||a||_F, ||b||_F); zero when both vanish. `b` may list
/// the same subsystems in a different order.
template <typename Scalar>
double relative_distance(const BasicOperator<Scalar>& a, const BasicOperator<Scalar>& b) {
  const BasicOperator<Scalar> bb = reorder_like(b, a.layout());
  const double scale = std::max(frobenius_norm(a), frobenius_norm(bb));
  if (scale == 0.0) return 0.0;
  return static_cast<double>((a.matrix() - bb.matrix()).norm()) / scale;
}

/// ||m - m^dagger||_F / max(1, ||m||_F).
template <typename Scalar>
double hermiticity_residual(const BasicOperator<Scalar>& m) {
  const double scale = std::max(1.0, frobenius_norm(m));
  return static_cast<double>((m.matrix() - m.matrix().adjoint()).norm()) / scale;
}

/// Smallest eigenvalue of the Hermitian part of `m`.
template <typename Scalar>
double min_eigenvalue(const BasicOperator<Scalar>& m) {
  using Matrix = typename BasicOperator<Scalar>::Matrix;
  const Matrix h = (m.matrix() + m.matrix().adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return static_cast<double>(es.eigenvalues().minCoeff());
}

/// True iff the smallest eigenvalue is at least -tol. Throws NotHermitian
/// when the Hermiticity residual exceeds `tol`.
template <typename Scalar>
bool is_psd(const BasicOperator<Scalar>& m, double tol = 1e-9) {
  if (hermiticity_residual(m) > tol) throw NotHermitian("operator is not Hermitian");
  return min_eigenvalue(m) >= -tol;
}

/// Trivial (dim-1) subsystems carry no information; this appends them.
template <typename Scalar>
BasicOperator<Scalar> with_trivial(const BasicOperator<Scalar>& m,
                                   std::span<const Subsystem> trivial) {
  std::vector<Subsystem> all = m.layout().subsystems();
  for (const auto& s : trivial) {
    if (s.dim != 1) throw DimensionError("'" + s.label + "' is not a trivial system");
    all.push_back(s);
  }
  return {SystemLayout(std::move(all)), m.matrix()};
}

/// Drops every dim-1 factor.
template <typename Scalar>
BasicOperator<Scalar> strip_trivial(const BasicOperator<Scalar>& m) {
  std::vector<Subsystem> kept;
  for (const auto& s : m.layout())
    if (s.dim != 1) kept.push_back(s);
  return {SystemLayout(std::move(kept)), m.matrix()};
}

/// `m` expressed on `target`: factors are matched by label and dimension,
/// reordered, and take their roles from `target`. Dim-1 factors present on
/// only one side are added or dropped. Throws LayoutMismatch otherwise.
template <typename Scalar>
BasicOperator<Scalar> conform_to(const BasicOperator<Scalar>& m, const SystemLayout& target) {
  std::vector<Subsystem> have;
  for (const auto& s : m.layout())
    if (s.dim != 1 || target.contains(s.label)) have.push_back(s);
  for (const auto& s : target)
    if (s.dim == 1 && !m.layout().contains(s.label)) have.push_back(s);
  if (have.size() != target.size())
    throw LayoutMismatch("operator and target act on different subsystems");
  for (const auto& s : have) {
    const auto k = target.find(s.label);
    if (!k || target[*k].dim != s.dim)
      throw LayoutMismatch("subsystem '" + s.label + "' does not match the target layout");
  }
  const BasicOperator<Scalar> padded(SystemLayout(std::move(have)), m.matrix());
  const auto labels = target.labels();
  return {target, reorder(padded, std::span<const std::string>(labels)).matrix()};
}

}  // namespace mpmkit
