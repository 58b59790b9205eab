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


#include "mpmkit/mpm.hpp"

#include <Eigen/Eigenvalues>

#include "mpmkit/errors.hpp"
#include "mpmkit/random.hpp"

namespace mpmkit {

SystemLayout Scenario::layout() const {
  SystemLayout out;
  for (const auto& p : parties) out = out.concat(p.layout());
  return out;
}

Eigen::Index Scenario::input_dim() const {
  Eigen::Index d = 1;
  for (const auto& p : parties) d *= p.input_dim();
  return d;
}

Eigen::Index Scenario::output_dim() const {
  Eigen::Index d = 1;
  for (const auto& p : parties) d *= p.output_dim();
  return d;
}

std::size_t Scenario::node_count() const {
  std::size_t n = 0;
  for (const auto& p : parties) n += p.nodes.size();
  return n;
}

std::size_t Scenario::party_index(const std::string& label) const {
  for (std::size_t i = 0; i < parties.size(); ++i)
    if (parties[i].party == label) return i;
  throw UnknownSubsystem("no party labelled '" + label + "'");
}

Scenario split_nodes(const Scenario& s) {
  Scenario out;
  for (const auto& p : s.parties)
    for (std::size_t j = 0; j < p.nodes.size(); ++j)
      out.parties.push_back(NodeSeq{p.party + std::to_string(j + 1), {p.nodes[j]}});
  return out;
}

std::string node_name(const Scenario& s, const NodeRef& ref) {
  const NodeSeq& p = s.parties.at(ref.party);
  if (p.nodes.size() == 1) return p.party;
  return p.party + std::to_string(ref.node + 1);
}

namespace {

void extend(const Scenario& s, std::vector<std::size_t>& next, LinearExtension& prefix,
            std::size_t total, std::vector<LinearExtension>& out) {
  if (prefix.size() == total) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t p = 0; p < s.parties.size(); ++p) {
    if (next[p] == s.parties[p].nodes.size()) continue;
    prefix.push_back(NodeRef{p, next[p]});
    ++next[p];
    extend(s, next, prefix, total, out);
    --next[p];
    prefix.pop_back();
  }
}

}  // namespace

std::vector<LinearExtension> linear_extensions(const Scenario& s) {
  const std::size_t total = s.node_count();
  if (total > kMaxExtensionNodes)
    throw TooManyNodes(std::to_string(total) + " nodes exceed the limit of " +
                       std::to_string(kMaxExtensionNodes));
  std::vector<LinearExtension> out;
  std::vector<std::size_t> next(s.parties.size(), 0);
  LinearExtension prefix;
  extend(s, next, prefix, total, out);
  return out;
}

NodeSeq chain(const Scenario& s, const LinearExtension& ext) {
  NodeSeq seq{"chain", {}};
  for (const auto& ref : ext) seq.nodes.push_back(s.parties.at(ref.party).nodes.at(ref.node));
  return seq;
}

NodeSeq process_as_comb(const Scenario& s, const LinearExtension& order) {
  const auto flip = [](std::vector<Subsystem> v, Role r) {
    for (auto& x : v) x.role = r;
    return v;
  };
  NodeSeq comb{"comb", {}};
  std::vector<Subsystem> pending{Subsystem{"#in", 1, Role::Input}};
  for (const auto& ref : order) {
    const Node& node = s.parties.at(ref.party).nodes.at(ref.node);
    comb.nodes.push_back(Node{pending, flip(node.inputs, Role::DualOutput)});
    pending = flip(node.outputs, Role::Input);
  }
  comb.nodes.push_back(Node{pending, {Subsystem{"#out", 1, Role::DualOutput}}});
  return comb;
}

RingElement affine_comb_projector(const Scenario& s) {
  RingElement p = RingElement::unit();
  for (const auto& party : s.parties) p = p * comb_projector(party);
  return p;
}

RingElement mpm_projector(const Scenario& s) {
  return RingElement::unit() - affine_comb_projector(s) + dep_all(s.layout());
}

Verdict validate_mpm(const LabeledOperator& w_in, const Scenario& s, double tol) {
  const SystemLayout layout = s.layout();
  const LabeledOperator w = conform_to(w_in, layout);
  Verdict v;
  Check pos = positivity_check(w, tol);
  v.add(pos.name, pos.residual, pos.pass);
  const double r = relative_distance(mpmkit::apply(mpm_projector(s), w), w);
  v.add("projector", r, r <= tol);
  const double target = static_cast<double>(s.output_dim());
  const double n = std::abs(trace(w) - cplx(target)) / target;
  v.add("normalization", n, n <= tol);
  return v;
}

Theorem2Report theorem2_check(const Scenario& s) {
  const std::size_t total = s.node_count();
  if (total > kMaxUnionNodes)
    throw TooManyNodes(std::to_string(total) + " nodes exceed the limit of " +
                       std::to_string(kMaxUnionNodes));
  const SystemLayout layout = s.layout();
  const RingElement d = dep_all(layout);
  const auto exts = linear_extensions(s);
  RingElement u = RingElement::zero();
  bool first = true;
  for (const auto& ext : exts) {
    const RingElement q = RingElement::unit() - comb_projector(chain(s, ext)) + d;
    u = first ? q : proj_union(u, q);
    first = false;
  }
  Theorem2Report report;
  report.extension_count = exts.size();
  const RingElement m = mpm_projector(s);
  report.union_form = to_string(u);
  report.mpm_form = to_string(m);
  report.equal = u == m;
  for (std::size_t a = 0; a < s.parties.size(); ++a)
    for (std::size_t b = a + 1; b < s.parties.size(); ++b) {
      const auto ab = lemma2_decomposition(s.parties[a], s.parties[b]).first;
      const auto ba = lemma2_decomposition(s.parties[b], s.parties[a]).first;
      const RingElement rhs = comb_projector(s.parties[a]) * comb_projector(s.parties[b]);
      report.lemma2_pairs_hold = report.lemma2_pairs_hold && (ab * ba == rhs);
    }
  return report;
}

std::pair<RingElement, RingElement> lemma2_decomposition(const NodeSeq& a, const NodeSeq& b) {
  const SystemLayout lb = b.layout();
  a.layout().concat(lb);
  NodeSeq joined{a.party + b.party, a.nodes};
  joined.nodes.insert(joined.nodes.end(), b.nodes.begin(), b.nodes.end());
  const RingElement chained = comb_projector(joined);
  const auto b_labels = lb.labels();
  const RingElement closed =
      comb_projector(b) -
      (RingElement::unit() - comb_projector(a)) * dep(std::span<const std::string>(b_labels));
  return {chained, closed};
}

LabeledOperator random_valid_mpm(const Scenario& s, Rng& rng, double scale) {
  const SystemLayout layout = s.layout();
  const double inv_din = 1.0 / static_cast<double>(s.input_dim());
  const LabeledOperator base = inv_din * LabeledOperator::identity(layout);
  const LabeledOperator raw = random_hermitian(layout, rng);
  const LabeledOperator delta = mpmkit::apply(mpm_projector(s) - dep_all(layout), raw);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(delta.matrix(), Eigen::EigenvaluesOnly);
  const double spread = es.eigenvalues().cwiseAbs().maxCoeff();
  if (spread == 0.0) return base;
  return base + cplx(scale * inv_din / spread) * delta;
}

}  // namespace mpmkit
