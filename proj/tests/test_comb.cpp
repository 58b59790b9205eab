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

#include "mpmkit/comb.hpp"
#include "mpmkit/errors.hpp"
#include "mpmkit/random.hpp"

using namespace mpmkit;

TEST(CombProjector, TwoCombCanonicalForm) {
  EXPECT_EQ(to_string(comb_projector(qubit_seq("A", 2))), "1 - A3 + A2*A3 - A1*A2*A3 + A0*A1*A2*A3");
  EXPECT_EQ(to_string(comb_projector(qubit_seq("A", 1))), "1 - A1 + A0*A1");
}

TEST(CombProjector, UnravelledFormAgrees) {
  for (int n = 1; n <= 5; ++n) {
    const NodeSeq seq = qubit_seq("X", n);
    EXPECT_EQ(comb_projector(seq), comb_projector_unravelled(seq)) << n;
  }
}

TEST(CombProjector, GroupedSystemsActAsProduct) {
  const NodeSeq seq{"A", {Node{{Subsystem{"a", 2, Role::Input}, Subsystem{"b", 2, Role::Input}},
                             {Subsystem{"c", 2, Role::DualOutput}}}}};
  EXPECT_EQ(to_string(comb_projector(seq)), "1 - c + a*b*c");
}

TEST(CombProjector, IdempotentAndSelfAdjoint) {
  for (int n = 1; n <= 4; ++n) {
    const NodeSeq seq = qubit_seq("A", n);
    const RingElement p = comb_projector(seq);
    EXPECT_TRUE(p.is_idempotent());
    EXPECT_TRUE(is_self_adjoint_projector(p, seq.layout(), 7, n <= 3 ? 20 : 4));
  }
}

TEST(RandomComb, AcceptedByBothValidators) {
  for (int n = 1; n <= 3; ++n)
    for (CombMode mode : {CombMode::Perturbation, CombMode::Network})
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const NodeSeq seq = qubit_seq("A", n);
        const auto m = random_comb(seq, seed, {mode});
        EXPECT_TRUE(validate_comb_trace(m, seq).valid) << n << ' ' << seed;
        EXPECT_TRUE(validate_comb_projective(m, seq).valid) << n << ' ' << seed;
      }
}

TEST(RandomComb, QutritCombs) {
  const NodeSeq seq = qubit_seq("Q", 2, 3);
  for (CombMode mode : {CombMode::Perturbation, CombMode::Network}) {
    const auto m = random_comb(seq, 3, {mode});
    EXPECT_TRUE(validate_comb_trace(m, seq).valid);
    EXPECT_TRUE(validate_comb_projective(m, seq).valid);
  }
}

TEST(RandomComb, DeterministicPerSeed) {
  const NodeSeq seq = qubit_seq("A", 2);
  EXPECT_EQ(random_comb(seq, 42).matrix(), random_comb(seq, 42).matrix());
  EXPECT_NE(random_comb(seq, 42).matrix(), random_comb(seq, 43).matrix());
}

TEST(RandomComb, TelescopingMarginal) {
  Rng rng(40);
  for (int n = 2; n <= 3; ++n) {
    const NodeSeq seq = qubit_seq("A", n);
    const NodeSeq shorter = qubit_seq("A", n - 1);
    for (int t = 0; t < 5; ++t) {
      const auto m = random_comb(seq, rng, {t % 2 ? CombMode::Network : CombMode::Perturbation});
      const std::string in = "A" + std::to_string(2 * n - 2), out = "A" + std::to_string(2 * n - 1);
      const auto reduced = partial_trace(m, {in, out});
      EXPECT_NEAR(trace(reduced).real(), std::pow(2.0, n), 1e-9);
      EXPECT_TRUE(validate_comb_trace((1.0 / 2.0) * reduced, shorter).valid);
      EXPECT_TRUE(validate_comb_projective((1.0 / 2.0) * reduced, shorter).valid);
    }
  }
}

TEST(Validators, NamedChecks) {
  const NodeSeq seq = qubit_seq("A", 2);
  const auto m = random_comb(seq, 1);
  const Verdict t = validate_comb_trace(m, seq);
  std::vector<std::string> names;
  for (const auto& c : t.checks) names.push_back(c.name);
  EXPECT_EQ(names, (std::vector<std::string>{"positivity", "marginal[2]", "marginal[1]", "normalization"}));
  const Verdict p = validate_comb_projective(m, seq);
  ASSERT_NE(p.find("projector"), nullptr);
  EXPECT_EQ(p.find("nope"), nullptr);
}

TEST(Validators, DetectEachViolation) {
  Rng rng(41);
  const NodeSeq seq = qubit_seq("A", 2);
  const SystemLayout l = seq.layout();
  const auto m = random_comb(seq, rng);

  const auto scaled = 1.1 * m;
  EXPECT_FALSE(validate_comb_trace(scaled, seq).find("normalization")->pass);
  EXPECT_FALSE(validate_comb_projective(scaled, seq).find("normalization")->pass);

  // Correlation between A1 and A2 with A3 traced out: the second input
  // would depend on the first output without passing through the comb.
  Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  LabeledOperator zz(SystemLayout({l[1], l[2]}), Eigen::kroneckerProduct(z, z).eval());
  zz = tensor(zz, LabeledOperator::identity(SystemLayout({l[0], l[3]})));
  const auto signalling = m + 0.01 * conform_to(zz, l);
  EXPECT_FALSE(validate_comb_projective(signalling, seq).find("projector")->pass);
  EXPECT_FALSE(validate_comb_trace(signalling, seq).valid);

  const auto negative = m - 0.5 * LabeledOperator::identity(l);
  EXPECT_FALSE(validate_comb_trace(negative, seq).find("positivity")->pass);
}

TEST(Validators, LayoutMismatchIsAnError) {
  const NodeSeq seq = qubit_seq("A", 1);
  const auto m = random_comb(qubit_seq("B", 1), 0);
  EXPECT_THROW(validate_comb_trace(m, seq), LayoutMismatch);
  EXPECT_THROW(validate_comb_projective(m, seq), LayoutMismatch);
}

TEST(Validators, AcceptFactorPermutation) {
  const NodeSeq seq = qubit_seq("A", 2);
  const auto m = random_comb(seq, 5);
  const auto shuffled = reorder(m, std::vector<std::string>{"A2", "A0", "A3", "A1"});
  EXPECT_TRUE(validate_comb_trace(shuffled, seq).valid);
  EXPECT_TRUE(validate_comb_projective(shuffled, seq).valid);
}
