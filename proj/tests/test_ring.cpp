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
#include "mpmkit/hs_basis.hpp"
#include "mpmkit/mpm.hpp"
#include "mpmkit/random.hpp"
#include "mpmkit/ring.hpp"
#include "oracles.hpp"

using namespace mpmkit;

namespace {

const std::vector<std::string> kGens{"G0", "G1", "G2", "G3", "G4", "G5"};

RingElement random_element(Rng& rng, int generators, int terms) {
  std::uniform_int_distribution<int> coeff(-3, 3), mask(0, (1 << generators) - 1);
  RingElement r;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    const int bits = mask(rng);
    for (int k = 0; k < generators; ++k)
      if (bits >> k & 1) m.push_back(kGens[k]);
    r = r + Rational(coeff(rng)) * dep(std::span<const std::string>(m));
  }
  return r;
}

SystemLayout gens_layout(std::vector<int> dims) {
  std::vector<Subsystem> subs;
  for (std::size_t k = 0; k < dims.size(); ++k) subs.push_back(Subsystem{kGens[k], dims[k]});
  return SystemLayout(std::move(subs));
}

}  // namespace

TEST(Ring, NaturalOrder) {
  EXPECT_TRUE(natural_less("A2", "A10"));
  EXPECT_FALSE(natural_less("A10", "A2"));
  EXPECT_TRUE(natural_less("A9", "B0"));
  EXPECT_TRUE(natural_less("L2", "L10"));
}

TEST(Ring, GeneratorsAreIdempotent) {
  const RingElement a = dep({"A"});
  EXPECT_EQ(a * a, a);
  EXPECT_EQ(dep({"A", "B"}), dep({"A"}) * dep({"B"}));
  EXPECT_EQ(dep({"B", "A", "A"}), dep({"A", "B"}));
}

TEST(Ring, Laws) {
  Rng rng(30);
  for (int t = 0; t < 200; ++t) {
    const RingElement a = random_element(rng, 6, 4), b = random_element(rng, 6, 4),
                      c = random_element(rng, 6, 4);
    EXPECT_EQ(ring_mul(a, b), ring_mul(b, a));
    EXPECT_EQ(ring_add(a, b), ring_add(b, a));
    EXPECT_EQ(ring_mul(ring_mul(a, b), c), ring_mul(a, ring_mul(b, c)));
    EXPECT_EQ(ring_add(ring_add(a, b), c), ring_add(a, ring_add(b, c)));
    EXPECT_EQ(ring_mul(a, ring_add(b, c)), ring_add(ring_mul(a, b), ring_mul(a, c)));
    EXPECT_EQ(ring_mul(a, RingElement::unit()), a);
    EXPECT_TRUE(ring_sub(a, a).is_zero());
    EXPECT_TRUE(ring_mul(a, RingElement::zero()).is_zero());
  }
}

TEST(Ring, CanonicalText) {
  const RingElement p = parse_ring("A0*A1*A2*A3 - A1*A2*A3 + A2*A3 - A3 + 1");
  EXPECT_EQ(to_string(p), "1 - A3 + A2*A3 - A1*A2*A3 + A0*A1*A2*A3");
  EXPECT_EQ(to_string(RingElement::zero()), "0");
  EXPECT_EQ(to_string(parse_ring("2*A0 - 1/2*B")), "2*A0 - 1/2*B");
  EXPECT_EQ(parse_ring("(1 - A)*(1 - B)"), parse_ring("1 - A - B + A*B"));
  EXPECT_EQ(to_string(parse_ring("A10*A2")), "A2*A10");
  EXPECT_THROW(parse_ring("1 + "), ParseError);
  EXPECT_THROW(parse_ring("(A"), ParseError);
  EXPECT_THROW(parse_ring("A $ B"), ParseError);
}

TEST(Ring, TextRoundTrip) {
  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    const RingElement a = random_element(rng, 6, 5);
    EXPECT_EQ(parse_ring(to_string(a)), a) << to_string(a);
  }
}

TEST(Ring, SemanticHomomorphism) {
  Rng rng(32);
  const SystemLayout l = gens_layout({2, 3, 2, 2});
  for (int t = 0; t < 30; ++t) {
    const RingElement a = random_element(rng, 4, 3), b = random_element(rng, 4, 3);
    const auto m = random_operator(l, rng);
    const auto ab = mpmkit::apply(ring_mul(a, b), m);
    EXPECT_LE(relative_distance(ab, mpmkit::apply(a, mpmkit::apply(b, m))), 1e-10);
    const auto sum = mpmkit::apply(ring_add(a, b), m);
    EXPECT_LE(relative_distance(sum, mpmkit::apply(a, m) + mpmkit::apply(b, m)), 1e-10);
  }
}

TEST(Ring, GeneratorMatchesDepolarizeOracle) {
  Rng rng(33);
  const SystemLayout l = gens_layout({2, 3, 2});
  const auto m = random_operator(l, rng);
  const auto got = mpmkit::apply(dep({"G0", "G2"}), m);
  EXPECT_LT(oracle::rel(got.matrix(), oracle::depolarize(m.matrix(), l.dims(), {true, false, true})),
            1e-13);
}

TEST(Ring, AbsorbingLaw) {
  const Scenario s = oracle::qubit_scenario({2, 1});
  const SystemLayout l = s.layout();
  const RingElement d = dep_all(l);
  for (const RingElement& p : {comb_projector(s.parties[0]), affine_comb_projector(s),
                               mpm_projector(s), comb_projector(qubit_seq("A", 3))}) {
    ASSERT_TRUE(p.is_idempotent());
    ASSERT_EQ(p.coefficient_sum(), Rational(1));
    const SystemLayout lp = [&] {
      std::vector<Subsystem> subs;
      for (const auto& x : p.labels()) subs.push_back(Subsystem{x, 2});
      return SystemLayout(std::move(subs));
    }();
    const RingElement dp = dep_all(lp);
    EXPECT_EQ(p * dp, dp);
  }
  EXPECT_EQ(mpm_projector(s) * d, d);
}

TEST(Ring, EliminateTrivial) {
  const SystemLayout l({Subsystem{"#in", 1}, Subsystem{"A", 2}});
  EXPECT_EQ(eliminate_trivial(RingElement::unit() - dep({"A"}) + dep({"A", "#in"}), l), RingElement::unit());
}

TEST(KeepSet, OneCombWorkedExample) {
  const NodeSeq seq = qubit_seq("A", 1);
  const KeepSet ks = to_keep_set(comb_projector(seq), seq.layout());
  EXPECT_EQ(ks.universe_size(), 16u);
  EXPECT_EQ(ks.count(), 13u);
  const auto removed = ks.enumerate(false);
  ASSERT_EQ(removed.size(), 3u);
  for (const auto& idx : removed) {
    EXPECT_GT(idx[0], 0);
    EXPECT_EQ(idx[1], 0);
  }
}

TEST(KeepSet, RejectsNonProjectors) {
  const SystemLayout l = gens_layout({2, 2});
  EXPECT_THROW(to_keep_set(Rational(2) * dep({"G0"}), l), NotAProjector);
  EXPECT_THROW(proj_union(parse_ring("2*G0"), dep({"G1"})), NotAProjector);
}

TEST(KeepSet, MatchesMatrixSemanticsExhaustively) {
  const Scenario a2b1 = oracle::qubit_scenario({2, 1});
  const Scenario three = oracle::qubit_scenario({1, 1, 1});
  const NodeSeq comb3 = qubit_seq("A", 3);
  struct Case {
    SystemLayout layout;
    RingElement r;
  };
  const std::vector<Case> cases{
      {comb3.layout(), comb_projector(comb3)},
      {a2b1.layout(), mpm_projector(a2b1)},
      {a2b1.layout(), affine_comb_projector(a2b1)},
      {three.layout(), mpm_projector(three)},
  };
  for (const auto& c : cases) {
    const HsBasis basis = default_basis(c.layout);
    const KeepSet ks = to_keep_set(c.r, basis);
    ASSERT_EQ(basis.count(), 4096u);
    std::size_t mismatches = 0;
    for (std::size_t f = 0; f < basis.count(); ++f) {
      const MultiIndex idx = basis.unflatten(f);
      const auto s = basis.product(idx);
      const auto img = mpmkit::apply(c.r, s);
      const bool kept = relative_distance(img, s) <= 1e-10;
      const bool removed = frobenius_norm(img) <= 1e-10;
      if (kept == removed || kept != ks.contains(idx)) ++mismatches;
    }
    EXPECT_EQ(mismatches, 0u) << to_string(c.r);
  }
}

TEST(KeepSet, UnionAndIntersection) {
  const SystemLayout l = gens_layout({2, 2, 2});
  const RingElement a = parse_ring("1 - G0 + G0*G1"), b = dep({"G2"});
  const KeepSet ka(l, a), kb(l, b), ku(l, proj_union(a, b)), ki(l, proj_intersect(a, b));
  const HsBasis basis = default_basis(l);
  for (std::size_t f = 0; f < basis.count(); ++f) {
    const MultiIndex idx = basis.unflatten(f);
    EXPECT_EQ(ku.contains(idx), ka.contains(idx) || kb.contains(idx));
    EXPECT_EQ(ki.contains(idx), ka.contains(idx) && kb.contains(idx));
  }
}

TEST(KeepSet, SelfAdjointProjectorBattery) {
  const Scenario s = oracle::qubit_scenario({1, 1});
  EXPECT_TRUE(is_self_adjoint_projector(mpm_projector(s), s.layout()));
  EXPECT_FALSE(is_self_adjoint_projector(Rational(1, 2) * dep({"A0"}), s.layout()));
}
