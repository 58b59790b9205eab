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


#include <gtest/gtest.h>

#include "mpmkit/errors.hpp"
#include "mpmkit/link.hpp"
#include "mpmkit/process.hpp"
#include "mpmkit/random.hpp"
#include "oracles.hpp"

using namespace mpmkit;

namespace {

Subsystem q(const std::string& label, Role role = Role::Ancilla, int dim = 2) {
  return Subsystem{label, dim, role};
}

NodeSeq one_node(std::vector<Subsystem> in, std::vector<Subsystem> out, std::string party = "M") {
  for (auto& s : in) s.role = Role::Input;
  for (auto& s : out) s.role = Role::DualOutput;
  return NodeSeq{std::move(party), {Node{std::move(in), std::move(out)}}};
}

Eigen::MatrixXcd id_pair(int d) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i * d + i, j * d + j) = 1.0;
  return m;
}

}  // namespace

TEST(Link, IdentityLinkRelabels) {
  Rng rng(60);
  const auto m = random_operator(SystemLayout({q("A"), q("X")}), rng);
  const auto id = identity_link(q("Y"), q("Z"));
  EXPECT_LT((id.matrix() - id_pair(2)).norm(), 1e-15);
  const auto r = link_product(m, id, {{"X", "Y"}});
  EXPECT_EQ(r.layout().labels(), (std::vector<std::string>{"A", "Z"}));
  EXPECT_LT((r.matrix() - m.matrix()).norm(), 1e-13);
}

TEST(Link, MatchesTraceFormula) {
  Rng rng(61);
  const auto m = random_operator(SystemLayout({q("A"), q("B", Role::Ancilla, 3)}), rng);
  const auto n = random_operator(SystemLayout({q("B*", Role::Ancilla, 3), q("C")}), rng);
  const auto got = link_product(m, n, {{"B", "B*"}});
  // Tr_{B B*}[(M (x) N)(1_A (x) Id_{B B*} (x) 1_C)]
  const Eigen::MatrixXcd big = oracle::kron(oracle::kron(Eigen::MatrixXcd::Identity(2, 2), id_pair(3)),
                                            Eigen::MatrixXcd::Identity(2, 2));
  const Eigen::MatrixXcd prod = oracle::kron(m.matrix(), n.matrix()) * big;
  const Eigen::MatrixXcd expected = oracle::partial_trace(prod, {2, 3, 3, 2}, {false, true, true, false});
  EXPECT_LT(oracle::rel(got.matrix(), expected), 1e-13);
}

TEST(Link, CommutativeUpToReorder) {
  Rng rng(62);
  for (int t = 0; t < 10; ++t) {
    const auto m = random_operator(SystemLayout({q("A"), q("B")}), rng);
    const auto n = random_operator(SystemLayout({q("B*"), q("C")}), rng);
    const auto mn = link_product(m, n, {{"B", "B*"}});
    const auto nm = link_product(n, m, {{"B*", "B"}});
    EXPECT_LE(relative_distance(reorder_like(nm, mn.layout()), mn), 1e-10);
  }
}

TEST(Link, Associative) {
  Rng rng(63);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_density(SystemLayout({q("A"), q("X")}), rng);
    const auto b = random_density(SystemLayout({q("X*"), q("Y")}), rng);
    const auto c = random_density(SystemLayout({q("Y*"), q("C")}), rng);
    const auto left = link_product(link_product(a, b, {{"X", "X*"}}), c, {{"Y", "Y*"}});
    const auto right = link_product(a, link_product(b, c, {{"Y", "Y*"}}), {{"X", "X*"}});
    EXPECT_LE(relative_distance(reorder_like(right, left.layout()), left), 1e-10);
  }
}

TEST(Link, PairingErrors) {
  Rng rng(64);
  const auto m = random_operator(SystemLayout({q("A"), q("B")}), rng);
  const auto n = random_operator(SystemLayout({q("C", Role::Ancilla, 3)}), rng);
  EXPECT_THROW(link_product(m, n, {{"B", "C"}}), PairingMismatch);
  EXPECT_THROW(link_product(m, n, {{"Q", "C"}}), UnknownSubsystem);
  EXPECT_THROW(identity_link(q("A"), q("B", Role::Ancilla, 3)), PairingMismatch);
}

TEST(Link, ChannelCompositionIsAComb) {
  // Two channels linked through a memory form a valid 2-comb.
  Rng rng(65);
  const SystemLayout in1({q("A0", Role::Input)}), out1({q("A1", Role::DualOutput), q("m")});
  const SystemLayout in2({q("A2", Role::Input), q("m*")});
  const auto c1 = isometry_choi(haar_isometry(2, 4, rng), in1, out1);
  Eigen::MatrixXcd u = haar_isometry(4, 4, rng);
  const auto c2 = partial_trace(isometry_choi(u, in2, SystemLayout({q("A3", Role::DualOutput), q("junk")})),
                                {"junk"});
  const auto comb = link_product(c1, c2, {{"m", "m*"}});
  const NodeSeq seq = qubit_seq("A", 2);
  EXPECT_TRUE(validate_comb_trace(comb, seq).valid);
  EXPECT_TRUE(validate_comb_projective(comb, seq).valid);
}

TEST(Born, MeasurePrepareChannel) {
  const SystemLayout in({q("X", Role::Input)}), out({q("Y", Role::DualOutput)});
  const Eigen::Vector2cd zero(1.0, 0.0), one(0.0, 1.0);
  const auto m0 = measure_prepare_choi(in, zero, out, one);
  const auto m1 = measure_prepare_choi(in, one, out, one);
  EXPECT_TRUE(validate_comb_trace(m0 + m1, one_node({q("X")}, {q("Y")})).valid);
  EXPECT_THROW(measure_prepare_choi(in, Eigen::Vector3cd::Zero(), out, one), DimensionError);
}

TEST(Born, NormalizationOnRandomPairs) {
  Rng rng(66);
  for (int total = 1; total <= 3; ++total)
    for (const auto& parts : oracle::compositions(total, 3)) {
      const Scenario s = oracle::qubit_scenario(parts);
      for (int t = 0; t < 3; ++t) {
        const auto w = random_valid_mpm(s, rng);
        std::vector<LabeledOperator> combs;
        for (const auto& p : s.parties)
          combs.push_back(random_comb(p, rng, {t % 2 ? CombMode::Network : CombMode::Perturbation}));
        EXPECT_NEAR(born_probability(w, combs), 1.0, 1e-8);
      }
    }
}

TEST(Born, InstrumentProbabilitiesSumToOne) {
  Rng rng(67);
  const Scenario s = oracle::qubit_scenario({2, 1});
  for (int t = 0; t < 20; ++t) {
    const auto w = random_valid_mpm(s, rng);
    const Instrument ia = random_instrument(s.parties[0], 3, rng);
    const Instrument ib = random_instrument(s.parties[1], 2, rng);
    EXPECT_TRUE(ia.check().valid);
    EXPECT_TRUE(ib.check().valid);
    double total = 0.0;
    for (const auto& [na, ma] : ia.branches)
      for (const auto& [nb, mb] : ib.branches) {
        const double p = born_probability(w, {ma, mb});
        EXPECT_GE(p, -1e-12);
        total += p;
      }
    EXPECT_NEAR(total, 1.0, 1e-9);
  }
}

TEST(Born, LayoutMismatch) {
  Rng rng(68);
  const Scenario s = oracle::qubit_scenario({1});
  const auto w = random_valid_mpm(s, rng);
  const auto wrong = random_comb(qubit_seq("B", 1), rng);
  EXPECT_THROW(born_probability(w, {wrong}), LayoutMismatch);
}

TEST(SideChannels, LabelsAndStructure) {
  const Scenario single = oracle::qubit_scenario({3, 1});
  EXPECT_EQ(side_channel_label(single, "A", 1), "L1");
  const Scenario both = oracle::qubit_scenario({2, 2});
  EXPECT_EQ(side_channel_label(both, "B", 2), "BL2");

  Rng rng(69);
  const auto w = random_valid_mpm(single, rng);
  const auto [we, se] = extend_with_side_channels(w, single, {2, 3});
  EXPECT_EQ(se.parties[0].nodes[0].output_labels(), (std::vector<std::string>{"A1", "L1"}));
  EXPECT_EQ(se.parties[0].nodes[1].input_labels(), (std::vector<std::string>{"A2", "L2"}));
  EXPECT_EQ(se.parties[0].nodes[2].input_labels(), (std::vector<std::string>{"A4", "L4"}));
  EXPECT_EQ(we.layout().at("L4").dim, 3);
  EXPECT_THROW(extend_with_side_channels(w, single, {2}), DimensionError);
}

TEST(SideChannels, ExtensionStaysValid) {
  Rng rng(70);
  for (const auto& parts : {std::vector<int>{2}, std::vector<int>{2, 1}, std::vector<int>{2, 2}}) {
    const Scenario s = oracle::qubit_scenario(parts);
    // The {2, 2} extension is a 4096-dimensional operator; one sample.
    const int samples = s.node_count() > 3 ? 1 : 3;
    for (int t = 0; t < samples; ++t) {
      const auto w = random_valid_mpm(s, rng);
      std::vector<int> dims;
      for (const auto& p : s.parties)
        for (std::size_t k = 1; k < p.nodes.size(); ++k) dims.push_back(2);
      const auto [we, se] = extend_with_side_channels(w, s, dims);
      EXPECT_TRUE(validate_mpm(we, se).valid);
    }
  }
}

TEST(SideChannels, SplittingIdentity) {
  // Tr[M^A W] with M^A = M2 * Id * M1 equals Tr[(M2 (x) M1)(W (x) Id^{L2 L1})].
  Rng rng(71);
  const Scenario s = oracle::qubit_scenario({2});
  const NodeSeq first = one_node({q("A0")}, {q("A1"), q("L1")});
  const NodeSeq second = one_node({q("A2"), q("L2")}, {q("A3")});
  for (int t = 0; t < 10; ++t) {
    const auto w = random_valid_mpm(s, rng);
    const auto m1 = random_comb(first, rng, {CombMode::Network});
    const auto m2 = random_comb(second, rng, {CombMode::Network});
    const auto ma = link_product(m1, m2, {{"L1", "L2"}});
    EXPECT_TRUE(validate_comb_trace(ma, s.parties[0]).valid);
    const auto [we, se] = extend_with_side_channels(w, s, {2});
    const cplx lhs = born_trace(w, {ma});
    const cplx rhs = born_trace(we, {m1, m2});
    EXPECT_LT(std::abs(lhs - rhs), 1e-9);
    // Independent oracle: explicit W (x) Id and a dense trace.
    const auto wid = tensor(w, LabeledOperator(SystemLayout({q("L1"), q("L2")}), id_pair(2)));
    const auto mm = conform_to(tensor(m1, m2), wid.layout());
    EXPECT_LT(std::abs((mm.matrix() * wid.matrix()).trace() - rhs), 1e-9);
  }
}

TEST(Conditional, RandomFirstNodeInstrumentsGiveValidProcesses) {
  // W is drawn among processes whose unravelling may start with A's first
  // node: single-party combs, and two-party combs with A0 -> A1 first.
  Rng rng(72);
  const Scenario two = oracle::qubit_scenario({2, 1});
  const Scenario one = oracle::qubit_scenario({2});
  const NodeSeq first = one_node({q("A0")}, {q("A1"), q("L1")});
  const NodeSeq second{"A", {Node{{q("A2", Role::Input), q("L2", Role::Input)}, {q("A3", Role::DualOutput)}}}};
  const std::vector<LinearExtension> orders{{{0, 0}, {1, 0}, {0, 1}}, {{0, 0}, {0, 1}, {1, 0}}};
  int checked = 0;
  for (int t = 0; t < 100; ++t) {
    const bool bipartite = t % 2 == 0;
    const Scenario& s = bipartite ? two : one;
    const Scenario rest = bipartite ? Scenario{{second, two.parties[1]}} : Scenario{{second}};
    const LabeledOperator w =
        bipartite ? strip_trivial(random_comb(process_as_comb(two, orders[t / 2 % 2]), rng,
                                              {t % 4 < 2 ? CombMode::Network : CombMode::Perturbation}))
                  : random_valid_mpm(one, rng);
    ASSERT_TRUE(validate_mpm(w, s).valid);
    const auto [we, se] = extend_with_side_channels(w, s, {2});
    const Instrument inst = random_instrument(first, 2, rng);
    for (const auto& [name, branch] : inst.branches) {
      const ConditionalPm c = conditional_pm_detailed(we, branch, rest);
      EXPECT_TRUE(validate_mpm(c.w, rest).valid);
      EXPECT_GT(c.raw_trace, 0.0);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 200);
}

TEST(Conditional, LastNodeFirstIsPostSelection) {
  // A process that feeds A1 straight into A2; conditioning on a projective
  // outcome at A2 would fix what node 1 must have output.
  const SystemLayout l = qubit_seq("A", 2).layout();
  const LabeledOperator rho(SystemLayout({l[0]}), Eigen::MatrixXcd::Identity(2, 2) * 0.5);
  const LabeledOperator id(SystemLayout({l[1], l[2]}), id_pair(2));
  const auto w = conform_to(tensor(tensor(rho, id), LabeledOperator::identity(SystemLayout({l[3]}))), l);
  const Scenario s{{qubit_seq("A", 2)}};
  ASSERT_TRUE(validate_mpm(w, s).valid);

  const Eigen::Vector2cd zero(1.0, 0.0);
  const auto last = measure_prepare_choi(SystemLayout({l[2]}), zero, SystemLayout({l[3]}), zero);
  const Scenario first_only{{NodeSeq{"A", {s.parties[0].nodes[0]}}}};
  EXPECT_THROW(conditional_pm(w, last, first_only), PostSelectionDetected);

  const auto first = measure_prepare_choi(SystemLayout({l[0]}), zero, SystemLayout({l[1]}), zero);
  const Scenario second_only{{NodeSeq{"A", {s.parties[0].nodes[1]}}}};
  EXPECT_TRUE(validate_mpm(conditional_pm(w, first, second_only), second_only).valid);

  const auto null_branch = LabeledOperator::zero(SystemLayout({l[0], l[1]}));
  EXPECT_THROW(conditional_pm(w, null_branch, second_only), PostSelectionDetected);
}
