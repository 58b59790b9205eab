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


#include "mpmkit/comb.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mpmkit/errors.hpp"
#include "mpmkit/hs_basis.hpp"
#include "mpmkit/link.hpp"
#include "mpmkit/random.hpp"

namespace mpmkit {

std::vector<std::string> Node::input_labels() const {
  std::vector<std::string> out;
  for (const auto& s : inputs) out.push_back(s.label);
  return out;
}

std::vector<std::string> Node::output_labels() const {
  std::vector<std::string> out;
  for (const auto& s : outputs) out.push_back(s.label);
  return out;
}

Eigen::Index Node::input_dim() const {
  Eigen::Index d = 1;
  for (const auto& s : inputs) d *= s.dim;
  return d;
}

Eigen::Index Node::output_dim() const {
  Eigen::Index d = 1;
  for (const auto& s : outputs) d *= s.dim;
  return d;
}

Node make_node(std::string in, int din, std::string out, int dout) {
  return Node{{Subsystem{std::move(in), din, Role::Input}},
              {Subsystem{std::move(out), dout, Role::DualOutput}}};
}

SystemLayout NodeSeq::layout() const {
  std::vector<Subsystem> all;
  for (const auto& n : nodes) {
    all.insert(all.end(), n.inputs.begin(), n.inputs.end());
    all.insert(all.end(), n.outputs.begin(), n.outputs.end());
  }
  return SystemLayout(std::move(all));
}

Eigen::Index NodeSeq::input_dim() const {
  Eigen::Index d = 1;
  for (const auto& n : nodes) d *= n.input_dim();
  return d;
}

Eigen::Index NodeSeq::output_dim() const {
  Eigen::Index d = 1;
  for (const auto& n : nodes) d *= n.output_dim();
  return d;
}

NodeSeq qubit_seq(const std::string& party, int n, int dim) {
  NodeSeq seq{party, {}};
  for (int j = 0; j < n; ++j)
    seq.nodes.push_back(make_node(party + std::to_string(2 * j), dim,
                                  party + std::to_string(2 * j + 1), dim));
  return seq;
}

RingElement comb_projector(const NodeSeq& seq) {
  RingElement p = RingElement::unit();
  for (const auto& node : seq.nodes) {
    const auto in = node.input_labels();
    const auto out = node.output_labels();
    const RingElement o = dep(std::span<const std::string>(out));
    const RingElement i = dep(std::span<const std::string>(in));
    p = RingElement::unit() - o + i * o * p;
  }
  return p;
}

RingElement comb_projector_unravelled(const NodeSeq& seq) {
  if (seq.nodes.empty()) return RingElement::unit();
  std::vector<RingElement> teeth;
  for (const auto& node : seq.nodes) {
    const auto in = node.input_labels();
    const auto out = node.output_labels();
    teeth.push_back(dep(std::span<const std::string>(in)));
    teeth.push_back(dep(std::span<const std::string>(out)));
  }
  RingElement e = RingElement::unit() - teeth[0];
  for (std::size_t k = 1; k < teeth.size(); ++k) e = RingElement::unit() - teeth[k] * e;
  return e;
}

void Verdict::add(std::string name, double residual, bool pass) {
  checks.push_back(Check{std::move(name), residual, pass});
  valid = valid && pass;
}

const Check* Verdict::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Check positivity_check(const LabeledOperator& m, double tol) {
  const double herm = hermiticity_residual(m);
  const double neg = std::max(0.0, -min_eigenvalue(m));
  return Check{"positivity", std::max(herm, neg), herm <= tol && neg <= tol};
}

namespace {

Check normalization_check(const LabeledOperator& m, double target, double tol) {
  const cplx tr = trace(m);
  const double residual = std::abs(tr - cplx(target)) / target;
  return Check{"normalization", residual, residual <= tol};
}

}  // namespace

Verdict validate_comb_trace(const LabeledOperator& m_in, const NodeSeq& seq, double tol) {
  const LabeledOperator m = conform_to(m_in, seq.layout());
  Verdict v;
  Check pos = positivity_check(m, tol);
  v.add(pos.name, pos.residual, pos.pass);

  LabeledOperator current = m;
  for (std::size_t j = seq.nodes.size(); j-- > 0;) {
    const auto& node = seq.nodes[j];
    const auto out = node.output_labels();
    const auto in = node.input_labels();
    const LabeledOperator marginal = partial_trace(current, std::span<const std::string>(out));
    const LabeledOperator expected = depolarize(marginal, std::span<const std::string>(in));
    const double r = relative_distance(marginal, expected);
    v.add("marginal[" + std::to_string(j + 1) + "]", r, r <= tol);
    current = partial_trace(marginal, std::span<const std::string>(in));
    current = (1.0 / static_cast<double>(node.input_dim())) * current;
  }
  const double r = std::abs(trace(current) - cplx(1.0));
  v.add("normalization", r, r <= tol);
  return v;
}

Verdict validate_comb_projective(const LabeledOperator& m_in, const NodeSeq& seq, double tol) {
  const LabeledOperator m = conform_to(m_in, seq.layout());
  Verdict v;
  Check pos = positivity_check(m, tol);
  v.add(pos.name, pos.residual, pos.pass);
  const double r = relative_distance(mpmkit::apply(comb_projector(seq), m), m);
  v.add("projector", r, r <= tol);
  Check norm = normalization_check(m, static_cast<double>(seq.input_dim()), tol);
  v.add(norm.name, norm.residual, norm.pass);
  return v;
}

LabeledOperator random_network_with_memory(const NodeSeq& seq, Rng& rng, int ancilla_dim) {
  if (seq.nodes.empty()) throw DimensionError("a network needs at least one node");
  if (ancilla_dim < 1) throw DimensionError("ancilla dimension must be positive");
  std::optional<LabeledOperator> acc;
  Eigen::Index prev_dim = 1;
  std::string prev_label;
  for (std::size_t j = 0; j < seq.nodes.size(); ++j) {
    const Node& node = seq.nodes[j];
    std::vector<Subsystem> in(node.inputs.begin(), node.inputs.end());
    if (j > 0)
      in.push_back(Subsystem{prev_label + "*", static_cast<int>(prev_dim), Role::Ancilla});
    const Eigen::Index din = node.input_dim() * prev_dim;
    Eigen::Index a = ancilla_dim;
    while (node.output_dim() * a < din) ++a;
    const std::string label = "#mem" + std::to_string(j);
    std::vector<Subsystem> out(node.outputs.begin(), node.outputs.end());
    out.push_back(Subsystem{label, static_cast<int>(a), Role::Ancilla});
    const SystemLayout li(std::move(in)), lo(std::move(out));
    const Eigen::MatrixXcd v = haar_isometry(li.total_dim(), lo.total_dim(), rng);
    LabeledOperator choi = isometry_choi(v, li, lo);
    if (acc) acc = link_product(*acc, choi, {{prev_label, prev_label + "*"}});
    else acc = std::move(choi);
    prev_label = label;
    prev_dim = a;
  }
  return *acc;
}

namespace {

LabeledOperator perturbation_comb(const NodeSeq& seq, Rng& rng, double scale) {
  const SystemLayout layout = seq.layout();
  const double m0 = 1.0 / static_cast<double>(seq.output_dim());
  const LabeledOperator base = m0 * LabeledOperator::identity(layout);
  if (scale == 0.0) return base;

  const HsBasis basis = default_basis(layout);
  std::uniform_real_distribution<double> u(-m0, m0);
  HsExpansion e{layout, {}};
  for (std::size_t flat = 1; flat < basis.count(); ++flat)
    e.coeffs.emplace(basis.unflatten(flat), cplx(u(rng), 0.0));
  const LabeledOperator raw = reconstruct(e, basis);
  const LabeledOperator delta = mpmkit::apply(comb_projector(seq) - dep_all(layout), raw);

  double s = scale;
  for (int attempt = 0; attempt < 200; ++attempt, s /= 2.0) {
    LabeledOperator m = base + cplx(s) * delta;
    if (min_eigenvalue(m) >= 0.0) return m;
  }
  return base;
}

LabeledOperator network_comb(const NodeSeq& seq, Rng& rng, int ancilla_dim) {
  if (seq.nodes.empty()) return LabeledOperator::identity(SystemLayout{});
  const LabeledOperator full = random_network_with_memory(seq, rng, ancilla_dim);
  const std::string memory = full.layout()[full.layout().size() - 1].label;
  return conform_to(partial_trace(full, {memory}), seq.layout());
}

}  // namespace

LabeledOperator random_comb(const NodeSeq& seq, Rng& rng, const RandomCombOptions& options) {
  if (options.mode == CombMode::Network) return network_comb(seq, rng, options.ancilla_dim);
  return perturbation_comb(seq, rng, options.scale);
}

LabeledOperator random_comb(const NodeSeq& seq, std::uint64_t seed,
                            const RandomCombOptions& options) {
  Rng rng(seed);
  return random_comb(seq, rng, options);
}

}  // namespace mpmkit
