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


#include "mpmkit/process.hpp"

#include <cmath>

#include "mpmkit/errors.hpp"

namespace mpmkit {

cplx born_trace(const LabeledOperator& w, const std::vector<LabeledOperator>& branches) {
  LabeledOperator m;
  for (const auto& b : branches) m = tensor(m, b);
  const LabeledOperator mm = conform_to(m, w.layout());
  // Tr[W M] = sum_ij W_ij M_ji.
  return w.matrix().cwiseProduct(mm.matrix().transpose()).sum();
}

double born_probability(const LabeledOperator& w, const std::vector<LabeledOperator>& branches) {
  return born_trace(w, branches).real();
}

LabeledOperator partial_contract(const LabeledOperator& w, const LabeledOperator& f) {
  const auto consumed = f.layout().labels();
  for (const auto& s : f.layout())
    if (w.layout().at(s.label).dim != s.dim)
      throw LayoutMismatch("subsystem '" + s.label + "' has different dimensions");
  const SystemLayout rest = w.layout().without(consumed);
  std::vector<std::string> order = consumed;
  const auto rest_labels = rest.labels();
  order.insert(order.end(), rest_labels.begin(), rest_labels.end());
  const LabeledOperator ww = reorder(w, std::span<const std::string>(order));
  const LabeledOperator ff = reorder_like(f, w.layout().select(consumed));

  const Eigen::Index dx = f.dim(), dr = rest.total_dim();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dr, dr);
  // result = sum_{x,x'} F(x,x') W[(x',.),(x,.)]
  for (Eigen::Index x = 0; x < dx; ++x)
    for (Eigen::Index xp = 0; xp < dx; ++xp) {
      const cplx fx = ff.matrix()(x, xp);
      if (fx == cplx(0.0)) continue;
      out += fx * ww.matrix().block(xp * dr, x * dr, dr, dr);
    }
  return {rest, std::move(out)};
}

LabeledOperator measure_prepare_choi(const SystemLayout& in, const Eigen::VectorXcd& m,
                                     const SystemLayout& out, const Eigen::VectorXcd& p) {
  if (m.size() != in.total_dim() || p.size() != out.total_dim())
    throw DimensionError("effect or state size does not match its layout");
  Eigen::VectorXcd v(m.size() * p.size());
  for (Eigen::Index i = 0; i < m.size(); ++i)
    for (Eigen::Index o = 0; o < p.size(); ++o) v(i * p.size() + o) = m(i) * std::conj(p(o));
  return {in.concat(out), v * v.adjoint()};
}

LabeledOperator Instrument::total() const {
  if (branches.empty()) throw InvalidProcess("instrument has no branches");
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(branches[0].second.dim(), branches[0].second.dim());
  const SystemLayout layout = seq.layout();
  for (const auto& [name, b] : branches) acc += conform_to(b, layout).matrix();
  return {layout, std::move(acc)};
}

Verdict Instrument::check(double tol) const {
  Verdict v;
  for (const auto& [name, b] : branches) {
    Check c = positivity_check(b, tol);
    v.add("positivity[" + name + "]", c.residual, c.pass);
  }
  const Verdict sum = validate_comb_trace(total(), seq, tol);
  for (const auto& c : sum.checks) v.add("sum." + c.name, c.residual, c.pass);
  return v;
}

Instrument random_instrument(const NodeSeq& seq, int outcomes, Rng& rng, int ancilla_dim) {
  if (outcomes < 1) throw DimensionError("an instrument needs at least one outcome");
  const LabeledOperator full =
      random_network_with_memory(seq, rng, std::max(ancilla_dim, outcomes));
  const Subsystem memory = full.layout()[full.layout().size() - 1];
  Instrument inst{seq, {}};
  for (int k = 0; k < outcomes; ++k) {
    Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(memory.dim, memory.dim);
    for (int m = k; m < memory.dim; m += outcomes) proj(m, m) = 1.0;
    const LabeledOperator f(SystemLayout({memory}), proj);
    inst.branches.emplace_back(std::to_string(k), conform_to(partial_contract(full, f), seq.layout()));
  }
  return inst;
}

std::string side_channel_label(const Scenario& s, const std::string& party, int k) {
  int with_gaps = 0;
  for (const auto& p : s.parties)
    if (p.nodes.size() > 1) ++with_gaps;
  if (with_gaps <= 1) return "L" + std::to_string(k);
  return party + "L" + std::to_string(k);
}

std::pair<LabeledOperator, Scenario> extend_with_side_channels(const LabeledOperator& w,
                                                               const Scenario& s,
                                                               const std::vector<int>& dims) {
  std::size_t gaps = 0;
  for (const auto& p : s.parties)
    if (!p.nodes.empty()) gaps += p.nodes.size() - 1;
  if (dims.size() != gaps)
    throw DimensionError("expected " + std::to_string(gaps) + " side-channel dimensions, got " +
                         std::to_string(dims.size()));

  LabeledOperator wx = conform_to(w, s.layout());
  Scenario ext = s;
  std::size_t g = 0;
  for (auto& party : ext.parties) {
    for (std::size_t k = 1; k < party.nodes.size(); ++k, ++g) {
      const int d = dims[g];
      if (d < 1) throw DimensionError("side-channel dimension must be positive");
      const int kk = static_cast<int>(k);
      Subsystem send{side_channel_label(s, party.party, 2 * kk - 1), d, Role::DualOutput};
      Subsystem recv{side_channel_label(s, party.party, 2 * kk), d, Role::Input};
      party.nodes[k - 1].outputs.push_back(send);
      party.nodes[k].inputs.push_back(recv);
      wx = tensor(wx, identity_link(send, recv));
    }
  }
  return {conform_to(wx, ext.layout()), std::move(ext)};
}

ConditionalPm conditional_pm_detailed(const LabeledOperator& w, const LabeledOperator& first_op,
                                      const Scenario& remaining, double tol) {
  const LabeledOperator raw = partial_contract(w, first_op);
  const cplx t = trace(raw);
  if (std::abs(t) <= tol)
    throw PostSelectionDetected("conditioning branch has vanishing probability");
  const double target = static_cast<double>(remaining.output_dim());
  const double c = target / t.real();
  const LabeledOperator out = conform_to(cplx(c) * raw, remaining.layout());
  const Verdict v = validate_mpm(out, remaining, tol);
  if (!v.valid) {
    std::string failed;
    for (const auto& chk : v.checks)
      if (!chk.pass) failed += (failed.empty() ? "" : ", ") + chk.name;
    throw PostSelectionDetected("conditional operator is not a valid process (" + failed + ")");
  }
  return {out, c, t.real()};
}

LabeledOperator conditional_pm(const LabeledOperator& w, const LabeledOperator& first_op,
                               const Scenario& remaining, double tol) {
  return conditional_pm_detailed(w, first_op, remaining, tol).w;
}

}  // namespace mpmkit
