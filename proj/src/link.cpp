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


#include "mpmkit/link.hpp"

#include <set>

#include "mpmkit/errors.hpp"

namespace mpmkit {

LabeledOperator link_product(const LabeledOperator& m, const LabeledOperator& n,
                             const DualPairing& pairing) {
  const SystemLayout& lm = m.layout();
  const SystemLayout& ln = n.layout();
  std::vector<std::string> bm, bn;
  std::set<std::string> used_m, used_n;
  for (const auto& [x, y] : pairing) {
    const Subsystem& sx = lm.at(x);
    const Subsystem& sy = ln.at(y);
    if (sx.dim != sy.dim)
      throw PairingMismatch("paired systems '" + x + "' (dim " + std::to_string(sx.dim) +
                            ") and '" + y + "' (dim " + std::to_string(sy.dim) + ") differ");
    if (!used_m.insert(x).second || !used_n.insert(y).second)
      throw PairingMismatch("system paired twice");
    bm.push_back(x);
    bn.push_back(y);
  }
  std::vector<std::string> am, cn;
  for (const auto& s : lm)
    if (!used_m.count(s.label)) am.push_back(s.label);
  for (const auto& s : ln)
    if (!used_n.count(s.label)) cn.push_back(s.label);

  std::vector<std::string> order_m = am, order_n = bn;
  order_m.insert(order_m.end(), bm.begin(), bm.end());
  order_n.insert(order_n.end(), cn.begin(), cn.end());
  const LabeledOperator mm = reorder(m, std::span<const std::string>(order_m));
  const LabeledOperator nn = reorder(n, std::span<const std::string>(order_n));

  SystemLayout result_layout =
      lm.select(std::span<const std::string>(am)).concat(ln.select(std::span<const std::string>(cn)));

  const Eigen::Index da = lm.dim_of(am), db = lm.dim_of(bm), dc = ln.dim_of(cn);
  // L[(a,c),(a',c')] = sum_{b,b'} M[(a,b),(a',b')] N[(b,c),(b',c')], computed as
  // one matrix product after regrouping row/column indices.
  Eigen::MatrixXcd mt(da * da, db * db);
  for (Eigen::Index a = 0; a < da; ++a)
    for (Eigen::Index ap = 0; ap < da; ++ap)
      for (Eigen::Index b = 0; b < db; ++b)
        for (Eigen::Index bp = 0; bp < db; ++bp)
          mt(a * da + ap, b * db + bp) = mm.matrix()(a * db + b, ap * db + bp);
  Eigen::MatrixXcd nt(db * db, dc * dc);
  for (Eigen::Index b = 0; b < db; ++b)
    for (Eigen::Index bp = 0; bp < db; ++bp)
      for (Eigen::Index c = 0; c < dc; ++c)
        for (Eigen::Index cp = 0; cp < dc; ++cp)
          nt(b * db + bp, c * dc + cp) = nn.matrix()(b * dc + c, bp * dc + cp);
  const Eigen::MatrixXcd lt = mt * nt;
  Eigen::MatrixXcd out(da * dc, da * dc);
  for (Eigen::Index a = 0; a < da; ++a)
    for (Eigen::Index ap = 0; ap < da; ++ap)
      for (Eigen::Index c = 0; c < dc; ++c)
        for (Eigen::Index cp = 0; cp < dc; ++cp)
          out(a * dc + c, ap * dc + cp) = lt(a * da + ap, c * dc + cp);
  return {std::move(result_layout), std::move(out)};
}

LabeledOperator identity_link(const Subsystem& a, const Subsystem& b) {
  if (a.dim != b.dim) throw PairingMismatch("identity link needs equal dimensions");
  const int d = a.dim;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i * d + i, j * d + j) = 1.0;
  return {SystemLayout({a, b}), std::move(m)};
}

LabeledOperator isometry_choi(const Eigen::MatrixXcd& v, const SystemLayout& input,
                              const SystemLayout& output) {
  const Eigen::Index di = input.total_dim(), d_o = output.total_dim();
  if (v.rows() != d_o || v.cols() != di)
    throw DimensionError("isometry shape does not match the layouts");
  Eigen::VectorXcd w(di * d_o);
  for (Eigen::Index i = 0; i < di; ++i)
    for (Eigen::Index o = 0; o < d_o; ++o) w(i * d_o + o) = std::conj(v(o, i));
  return {input.concat(output), w * w.adjoint()};
}

LabeledOperator state_choi(const Eigen::MatrixXcd& rho, const SystemLayout& output) {
  return {output, rho.transpose()};
}

}  // namespace mpmkit
