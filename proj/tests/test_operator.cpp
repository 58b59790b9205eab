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
#include "mpmkit/operator.hpp"
#include "mpmkit/random.hpp"
#include "oracles.hpp"

using namespace mpmkit;

namespace {

SystemLayout layout_of(std::vector<std::pair<std::string, int>> spec) {
  std::vector<Subsystem> subs;
  for (auto& [l, d] : spec) subs.push_back(Subsystem{l, d, Role::Ancilla});
  return SystemLayout(std::move(subs));
}

}  // namespace

TEST(Layout, RejectsDuplicateLabels) {
  EXPECT_THROW(layout_of({{"A", 2}, {"A", 3}}), LabelCollision);
  EXPECT_THROW(layout_of({{"A", 0}}), DimensionError);
}

TEST(Layout, LookupAndDims) {
  const SystemLayout l = layout_of({{"A", 2}, {"B", 3}, {"C", 4}});
  EXPECT_EQ(l.total_dim(), 24);
  EXPECT_EQ(l.index_of("B"), 1u);
  EXPECT_THROW(l.index_of("Z"), UnknownSubsystem);
  const std::vector<std::string> ac{"A", "C"};
  EXPECT_EQ(l.dim_of(ac), 8);
  EXPECT_EQ(l.without(ac).labels(), std::vector<std::string>{"B"});
}

TEST(Layout, RoleText) {
  for (Role r : {Role::Input, Role::DualOutput, Role::Ancilla})
    EXPECT_EQ(role_from_string(to_string(r)), r);
  EXPECT_THROW(role_from_string("sideways"), ParseError);
}

TEST(Operator, ConstructorChecksShape) {
  EXPECT_THROW(LabeledOperator(layout_of({{"A", 2}}), Eigen::MatrixXcd::Zero(3, 3)), LayoutMismatch);
}

TEST(Operator, TensorMatchesEntryFormula) {
  Rng rng(1);
  const auto a = random_operator(layout_of({{"A", 2}, {"B", 3}}), rng);
  const auto b = random_operator(layout_of({{"C", 2}}), rng);
  const auto t = tensor(a, b);
  EXPECT_EQ(t.layout().labels(), (std::vector<std::string>{"A", "B", "C"}));
  EXPECT_LT(oracle::rel(t.matrix(), oracle::kron(a.matrix(), b.matrix())), 1e-15);
  EXPECT_THROW(tensor(a, a), LabelCollision);
}

TEST(Operator, PartialTraceMatchesOracle) {
  Rng rng(2);
  const SystemLayout l = layout_of({{"A", 2}, {"B", 3}, {"C", 2}, {"D", 2}});
  for (int trial = 0; trial < 10; ++trial) {
    const auto m = random_operator(l, rng);
    for (unsigned mask = 0; mask < 16; ++mask) {
      std::vector<std::string> over;
      std::vector<bool> flags(4);
      for (int k = 0; k < 4; ++k)
        if (mask >> k & 1) {
          over.push_back(l[k].label);
          flags[k] = true;
        }
      const auto got = partial_trace(m, std::span<const std::string>(over));
      EXPECT_LT(oracle::rel(got.matrix(), oracle::partial_trace(m.matrix(), l.dims(), flags)), 1e-13);
    }
  }
}

TEST(Operator, PartialTraceOrderIndependent) {
  Rng rng(3);
  const auto m = random_operator(layout_of({{"X", 2}, {"Y", 3}, {"Z", 2}}), rng);
  const auto xy = partial_trace(m, {"X", "Y"});
  const auto yx = partial_trace(m, {"Y", "X"});
  const auto seq = partial_trace(partial_trace(m, {"Y"}), {"X"});
  EXPECT_LE(relative_distance(xy, yx), 1e-12);
  EXPECT_LE(relative_distance(xy, seq), 1e-12);
}

TEST(Operator, PartialTraceIsLinear) {
  Rng rng(4);
  const SystemLayout l = layout_of({{"A", 3}, {"B", 2}});
  const auto a = random_operator(l, rng), b = random_operator(l, rng);
  const cplx s(0.3, -1.2);
  const auto lhs = partial_trace(a + s * b, {"A"});
  const auto rhs = partial_trace(a, {"A"}) + s * partial_trace(b, {"A"});
  EXPECT_LE(relative_distance(lhs, rhs), 1e-12);
}

TEST(Operator, TensorThenTraceRecoversFactor) {
  Rng rng(5);
  for (int da = 1; da <= 4; ++da)
    for (int db = 1; db <= 4; ++db) {
      const auto a = random_operator(layout_of({{"A", da}}), rng);
      const auto b = random_operator(layout_of({{"B", db}}), rng);
      const auto got = partial_trace(tensor(a, b), {"B"});
      EXPECT_LE(relative_distance(got, trace(b) * a), 1e-12);
    }
}

TEST(Operator, HsInnerConjugateSymmetric) {
  Rng rng(6);
  const SystemLayout l = layout_of({{"A", 2}, {"B", 3}});
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_operator(l, rng), b = random_operator(l, rng);
    EXPECT_LT(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))), 1e-12);
    EXPECT_LT(std::abs(hs_inner(a, b) - (a.matrix().adjoint() * b.matrix()).trace()), 1e-12);
  }
  EXPECT_THROW(hs_inner(random_operator(l, rng), random_operator(layout_of({{"A", 6}}), rng)),
               LayoutMismatch);
}

TEST(Operator, DepolarizeMatchesOracle) {
  Rng rng(7);
  const SystemLayout l = layout_of({{"A", 2}, {"B", 3}, {"C", 2}});
  const auto m = random_operator(l, rng);
  const auto got = depolarize(m, std::vector<std::string>{"C", "A"});
  EXPECT_LT(oracle::rel(got.matrix(), oracle::depolarize(m.matrix(), l.dims(), {true, false, true})),
            1e-13);
  EXPECT_EQ(got.layout(), l);
}

TEST(Operator, ReorderRoundTrip) {
  Rng rng(8);
  const SystemLayout l = layout_of({{"A", 2}, {"B", 3}, {"C", 4}});
  const auto a = random_operator(layout_of({{"A", 2}}), rng);
  const auto b = random_operator(layout_of({{"B", 3}}), rng);
  const auto c = random_operator(layout_of({{"C", 4}}), rng);
  const auto abc = tensor(tensor(a, b), c);
  const auto cab = reorder(abc, std::vector<std::string>{"C", "A", "B"});
  EXPECT_LE(relative_distance(cab, tensor(tensor(c, a), b)), 1e-14);
  EXPECT_LE(relative_distance(reorder_like(cab, l), abc), 1e-14);
}

TEST(Operator, ConformAddsAndDropsTrivialFactors) {
  Rng rng(9);
  const auto m = random_operator(layout_of({{"A", 2}, {"B", 2}}), rng);
  const SystemLayout target({Subsystem{"#in", 1, Role::Input}, Subsystem{"B", 2, Role::Input},
                             Subsystem{"A", 2, Role::DualOutput}});
  const auto c = conform_to(m, target);
  EXPECT_EQ(c.layout(), target);
  const auto ba = reorder(m, std::vector<std::string>{"B", "A"});
  EXPECT_LT((strip_trivial(c).matrix() - ba.matrix()).norm(), 1e-15);
  const auto back = conform_to(c, m.layout());
  EXPECT_LE(relative_distance(back, m), 1e-15);
  EXPECT_THROW(conform_to(m, layout_of({{"A", 2}, {"C", 2}})), LayoutMismatch);
  EXPECT_THROW(conform_to(m, layout_of({{"A", 2}, {"B", 3}})), LayoutMismatch);
}

TEST(Operator, PsdAndHermiticity) {
  Rng rng(10);
  const SystemLayout l = layout_of({{"A", 3}});
  EXPECT_TRUE(is_psd(random_density(l, rng)));
  EXPECT_FALSE(is_psd(-1.0 * random_density(l, rng)));
  Eigen::MatrixXcd nh = Eigen::MatrixXcd::Zero(3, 3);
  nh(0, 1) = 1.0;
  EXPECT_THROW(is_psd(LabeledOperator(l, nh)), NotHermitian);
  EXPECT_LT(hermiticity_residual(random_hermitian(l, rng)), 1e-15);
}

TEST(Random, HaarIsometryIsIsometric) {
  Rng rng(11);
  const Eigen::MatrixXcd v = haar_isometry(3, 6, rng);
  EXPECT_LT((v.adjoint() * v - Eigen::MatrixXcd::Identity(3, 3)).norm(), 1e-13);
  EXPECT_THROW(haar_isometry(4, 2, rng), DimensionError);
}
