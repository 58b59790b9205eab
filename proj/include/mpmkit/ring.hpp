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


#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mpmkit/hs_basis.hpp"
#include "mpmkit/layout.hpp"
#include "mpmkit/operator.hpp"
#include "mpmkit/random.hpp"

namespace mpmkit {

using Rational = boost::rational<long long>;

/// Label order used for printing: digit runs compare numerically, so A2 < A10.
bool natural_less(std::string_view a, std::string_view b);

/// A product of depolarizing generators, stored as a naturally sorted label
/// set. The empty monomial is the unit.
using Monomial = std::vector<std::string>;

/// Canonical term order: by degree, then lexicographically by label.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Polynomial with rational coefficients in commuting idempotent generators
/// dep(X) = Tr_X[.] (x) 1_X / d_X. Zero coefficients are never stored.
class RingElement {
 public:
  using Terms = std::map<Monomial, Rational, MonomialLess>;

  RingElement() = default;
  explicit RingElement(Terms terms);

  static RingElement zero() { return {}; }
  static RingElement unit() { return constant(1); }
  static RingElement constant(Rational c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;
  /// Sum of all coefficients; 1 for every projector that fixes the identity.
  Rational coefficient_sum() const;
  /// Every label that occurs in some monomial, naturally sorted.
  std::vector<std::string> labels() const;

  bool is_idempotent() const;

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(Rational c, const RingElement& a);
  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void add_term(const Monomial& m, Rational c);
  Terms terms_;
};

inline RingElement ring_add(const RingElement& a, const RingElement& b) { return a + b; }
inline RingElement ring_sub(const RingElement& a, const RingElement& b) { return a - b; }
inline RingElement ring_mul(const RingElement& a, const RingElement& b) { return a * b; }

/// Single monomial over `labels`; the empty list gives the unit.
RingElement dep(std::span<const std::string> labels);
RingElement dep(std::initializer_list<std::string> labels);
/// As above, checking every label against `layout` (UnknownSubsystem).
RingElement dep(const SystemLayout& layout, std::span<const std::string> labels);
/// The absorbing element D over every subsystem of `layout`.
RingElement dep_all(const SystemLayout& layout);

/// Replaces generators of dim-1 subsystems by 1: depolarizing a trivial
/// system is the identity map.
RingElement eliminate_trivial(const RingElement& r, const SystemLayout& layout);

/// Canonical text form, e.g. `1 - A3 + A2*A3`. Non-unit coefficients print
/// as `2*A0` or `1/2*A0`; the zero element prints as `0`.
std::string to_string(const RingElement& r);
/// Accepts sums, differences, products, integers, fractions p/q, labels and
/// parentheses. Throws ParseError.
RingElement parse_ring(std::string_view text);

/// Superoperator action on `m`. Labels of `r` must exist in m's layout.
/// Call it qualified: argument-dependent lookup also finds std::apply.
LabeledOperator apply(const RingElement& r, const LabeledOperator& m);

/// Diagonal action of a projector on the product HS basis: sigma_i is kept
/// iff the coefficients of the monomials contained in zeros(i) sum to 1.
class KeepSet {
 public:
  KeepSet(SystemLayout layout, const RingElement& r);

  const SystemLayout& layout() const { return layout_; }
  bool contains(const MultiIndex& index) const;
  /// Keep decision for a zero pattern (bit k set iff i_k = 0).
  bool keeps_pattern(std::uint64_t zero_mask) const;
  /// Number of kept multi-indices.
  std::uint64_t count() const;
  /// Total number of multi-indices on the layout.
  std::uint64_t universe_size() const;
  /// Every kept (or removed) multi-index in enumeration order. Throws TooLarge
  /// above 2^24 indices.
  std::vector<MultiIndex> enumerate(bool kept = true) const;

  /// Patterns are materialized as a table up to this many subsystems.
  static constexpr std::size_t kMaxTableSubsystems = 16;

 private:
  Rational pattern_sum(std::uint64_t zero_mask) const;

  SystemLayout layout_;
  std::vector<std::pair<std::uint64_t, Rational>> masks_;
  std::vector<std::uint8_t> table_;
};

/// Throws NotAProjector unless `r` is idempotent. The basis only fixes the
/// layout; the keep rule does not depend on the choice of product basis.
KeepSet to_keep_set(const RingElement& r, const HsBasis& basis);
KeepSet to_keep_set(const RingElement& r, const SystemLayout& layout);

/// a + b - ab; both must be idempotent (NotAProjector).
RingElement proj_union(const RingElement& a, const RingElement& b);
/// ab; both must be idempotent (NotAProjector).
RingElement proj_intersect(const RingElement& a, const RingElement& b);

/// Symbolic idempotency plus Tr[M^dag r(N)] = Tr[r(M)^dag N] on `trials`
/// random operator pairs.
bool is_self_adjoint_projector(const RingElement& r, const SystemLayout& layout,
                               std::uint64_t seed = 0, int trials = 20, double tol = 1e-9);

}  // namespace mpmkit
