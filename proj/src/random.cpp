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


#include "mpmkit/random.hpp"

#include <Eigen/QR>

#include "mpmkit/errors.hpp"

namespace mpmkit {

Eigen::MatrixXcd random_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::MatrixXcd g(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) g(r, c) = cplx(n(rng), n(rng));
  return g;
}

LabeledOperator random_hermitian(const SystemLayout& layout, Rng& rng) {
  const Eigen::Index d = layout.total_dim();
  Eigen::MatrixXcd g = random_gaussian(d, d, rng);
  Eigen::MatrixXcd h = (g + g.adjoint()) / 2.0;
  return {layout, std::move(h)};
}

LabeledOperator random_operator(const SystemLayout& layout, Rng& rng) {
  const Eigen::Index d = layout.total_dim();
  return {layout, random_gaussian(d, d, rng)};
}

LabeledOperator random_density(const SystemLayout& layout, Rng& rng) {
  const Eigen::Index d = layout.total_dim();
  Eigen::MatrixXcd g = random_gaussian(d, d, rng);
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  return {layout, std::move(rho)};
}

Eigen::MatrixXcd haar_isometry(Eigen::Index din, Eigen::Index dout, Rng& rng) {
  if (dout < din) throw DimensionError("isometry needs dout >= din");
  Eigen::MatrixXcd g = random_gaussian(dout, dout, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  // Fixing the phases of R's diagonal makes Q Haar distributed.
  for (Eigen::Index k = 0; k < dout; ++k) {
    const cplx rk = r(k, k);
    if (std::abs(rk) > 0) q.col(k) *= rk / std::abs(rk);
  }
  return q.leftCols(din);
}

}  // namespace mpmkit
