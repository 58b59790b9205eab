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


#include "mpmkit/activation.hpp"

#include <algorithm>
#include <cstdio>

#include "mpmkit/errors.hpp"
#include "mpmkit/fixtures.hpp"
#include "mpmkit/game.hpp"
#include "mpmkit/mpm.hpp"
#include "mpmkit/process.hpp"

namespace mpmkit {

namespace {

class Recorder {
 public:
  explicit Recorder(ActivationReport& r, double tol) : r_(r), tol_(tol) {}

  void residual(const std::string& name, double value, std::string detail = {}) {
    add(name, value, value <= tol_, std::move(detail));
  }

  void verdict(const std::string& name, const Verdict& v) {
    double worst = 0.0;
    std::string failed;
    for (const auto& c : v.checks) {
      worst = std::max(worst, c.residual);
      if (!c.pass) failed += (failed.empty() ? "failed: " : ", ") + c.name;
    }
    add(name, worst, v.valid, failed);
  }

  void add(const std::string& name, double residual, bool pass, std::string detail) {
    r_.stages.push_back(Stage{name, residual, pass, std::move(detail)});
    if (!pass && r_.failed_stage.empty()) r_.failed_stage = name;
  }

 private:
  ActivationReport& r_;
  double tol_;
};

double frobenius_distance(const LabeledOperator& a, const LabeledOperator& b) {
  return (a.matrix() - conform_to(b, a.layout()).matrix()).norm();
}

// `u` on the factor `label`, identity elsewhere.
LabeledOperator local_operator(const SystemLayout& layout, const std::string& label,
                               const Eigen::MatrixXcd& u) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Ones(1, 1);
  for (const auto& s : layout) {
    const Eigen::MatrixXcd f =
        s.label == label ? u : Eigen::MatrixXcd::Identity(s.dim, s.dim).eval();
    Eigen::MatrixXcd next = Eigen::kroneckerProduct(m, f);
    m = std::move(next);
  }
  return {layout, std::move(m)};
}

LabeledOperator forwarding_operation(const Subsystem& a0, const Subsystem& l1,
                                     const Subsystem& a1) {
  if (l1.dim != a0.dim)
    throw DimensionError("forwarding needs dim(" + l1.label + ") = dim(" + a0.label + ") = " +
                         std::to_string(a0.dim) + ", got " + std::to_string(l1.dim));
  const LabeledOperator id = identity_link(a0, l1);
  const LabeledOperator half =
      (1.0 / a1.dim) * LabeledOperator::identity(SystemLayout({a1}));
  return tensor(id, half);
}

}  // namespace

ActivationReport activation_demo(const ActivationOptions& options) {
  ActivationReport report;
  Recorder rec(report, options.tol);
  const LabeledOperator w = fixtures::w_ab();

  if (options.swapped_order) {
    Scenario s = fixtures::two_plus_one();
    std::swap(s.parties[0].nodes[0], s.parties[0].nodes[1]);
    rec.verdict("w_ab.mpm[A2<A1]", validate_mpm(w, s, options.tol));
    const NodeSeq comb = fixtures::w_ab_comb(true);
    const Verdict vt = validate_comb_trace(w, comb, options.tol);
    const Verdict vp = validate_comb_projective(w, comb, options.tol);
    rec.verdict("w_ab.comb[A1<B<A2].trace", vt);
    rec.verdict("w_ab.comb[A1<B<A2].projective", vp);
    return report;
  }

  const Scenario s = fixtures::two_plus_one();
  rec.verdict("w_ab.mpm", validate_mpm(w, s, options.tol));
  rec.residual("w_ab.trace", std::abs(trace(w) - cplx(8.0)));
  {
    const LabeledOperator simplified = mpmkit::apply(dep({"A3"}) + dep({"B1"}) - dep_all(w.layout()), w);
    rec.residual("w_ab.simplified", frobenius_distance(w, simplified));
  }
  {
    const NodeSeq comb = fixtures::w_ab_comb(false);
    rec.verdict("w_ab.comb[A2<B<A1].trace", validate_comb_trace(w, comb, options.tol));
    rec.verdict("w_ab.comb[A2<B<A1].projective", validate_comb_projective(w, comb, options.tol));
  }

  LabeledOperator w_ext;
  Scenario s_ext;
  try {
    std::tie(w_ext, s_ext) = extend_with_side_channels(w, s, {options.side_dim});
  } catch (const Error& e) {
    rec.add("extend", 0.0, false, e.what());
    return report;
  }
  rec.verdict("extend", validate_mpm(w_ext, s_ext, options.tol));

  ConditionalPm forwarded;
  try {
    const SystemLayout& l = w_ext.layout();
    const LabeledOperator m1 = forwarding_operation(l.at("A0"), l.at("L1"), l.at("A1"));
    forwarded = conditional_pm_detailed(w_ext, m1, fixtures::activated(), 1e-9);
  } catch (const Error& e) {
    rec.add("forward", 0.0, false, e.what());
    return report;
  }
  rec.residual("forward.target", frobenius_distance(forwarded.w, fixtures::forwarded()));
  rec.residual("forward.trace", std::abs(forwarded.raw_trace - 4.0));
  rec.residual("forward.normalization", std::abs(forwarded.normalization - 1.0));
  rec.verdict("forward.mpm", validate_mpm(forwarded.w, fixtures::activated(), options.tol));

  const SystemLayout a2({forwarded.w.layout().at("A2")});
  Eigen::MatrixXcd p0 = Eigen::MatrixXcd::Zero(2, 2), p1 = Eigen::MatrixXcd::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  const Scenario rest = fixtures::ocb_scenario();
  LabeledOperator plus, minus;
  try {
    plus = conditional_pm(forwarded.w, LabeledOperator(a2, p0), rest, 1e-9);
    minus = conditional_pm(forwarded.w, LabeledOperator(a2, p1), rest, 1e-9);
  } catch (const Error& e) {
    rec.add("branch", 0.0, false, e.what());
    return report;
  }
  rec.residual("branch+", frobenius_distance(plus, fixtures::ocb(+1)));
  rec.residual("branch-.raw", frobenius_distance(minus, fixtures::ocb(-1)));
  Eigen::Matrix2cd sy;
  sy << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
  const LabeledOperator u = local_operator(minus.layout(), "L2", sy);
  const LabeledOperator rotated = u * minus * u.adjoint();
  rec.residual("branch-", frobenius_distance(rotated, fixtures::ocb(+1)));
  rec.verdict("ocb.pm", validate_mpm(plus, rest, options.tol));

  try {
    report.game_value = ocb_game_value(plus);
    report.causal_bound = causal_bound_bruteforce(ocb_guess_game());
  } catch (const Error& e) {
    rec.add("game", 0.0, false, e.what());
    return report;
  }
  const double gap = report.game_value - report.causal_bound;
  char buf[128];
  std::snprintf(buf, sizeof buf, "value %.12g, causal bound %.12g, gap %.12g", report.game_value,
                report.causal_bound, gap);
  rec.add("game", std::max(0.0, options.margin - gap), gap >= options.margin, buf);
  return report;
}

}  // namespace mpmkit
