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


#include "mpmkit/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mpmkit/errors.hpp"

namespace mpmkit {

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ei = i, ej = j;
      while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
      while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
      std::string_view na = a.substr(i, ei - i), nb = b.substr(j, ej - j);
      const auto strip = [](std::string_view s) {
        const auto p = s.find_first_not_of('0');
        return p == std::string_view::npos ? std::string_view{} : s.substr(p);
      };
      const std::string_view sa = strip(na), sb = strip(nb);
      if (sa.size() != sb.size()) return sa.size() < sb.size();
      if (sa != sb) return sa < sb;
      if (na.size() != nb.size()) return na.size() < nb.size();
      i = ei;
      j = ej;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  return a.size() - i < b.size() - j;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (natural_less(a[k], b[k])) return true;
    if (natural_less(b[k], a[k])) return false;
  }
  return false;
}

namespace {

Monomial make_monomial(std::span<const std::string> labels) {
  Monomial m(labels.begin(), labels.end());
  std::sort(m.begin(), m.end(), [](const std::string& x, const std::string& y) {
    return natural_less(x, y);
  });
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return m;
}

Monomial monomial_union(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                 [](const std::string& x, const std::string& y) { return natural_less(x, y); });
  return out;
}

}  // namespace

RingElement::RingElement(Terms terms) {
  for (const auto& [m, c] : terms) add_term(make_monomial(m), c);
}

RingElement RingElement::constant(Rational c) {
  RingElement r;
  r.add_term({}, c);
  return r;
}

void RingElement::add_term(const Monomial& m, Rational c) {
  if (c == Rational(0)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Rational(0)) terms_.erase(it);
  }
}

Rational RingElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(make_monomial(m));
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational RingElement::coefficient_sum() const {
  Rational s(0);
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

std::vector<std::string> RingElement::labels() const {
  Monomial all;
  for (const auto& [m, c] : terms_) all = monomial_union(all, m);
  return all;
}

bool RingElement::is_idempotent() const { return *this * *this == *this; }

RingElement operator+(const RingElement& a, const RingElement& b) {
  RingElement r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

RingElement operator-(const RingElement& a) {
  RingElement r;
  for (const auto& [m, c] : a.terms_) r.add_term(m, -c);
  return r;
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const RingElement& a, const RingElement& b) {
  RingElement r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_union(ma, mb), ca * cb);
  return r;
}

RingElement operator*(Rational c, const RingElement& a) {
  RingElement r;
  for (const auto& [m, v] : a.terms_) r.add_term(m, c * v);
  return r;
}

RingElement dep(std::span<const std::string> labels) {
  RingElement::Terms t;
  t.emplace(make_monomial(labels), Rational(1));
  return RingElement(std::move(t));
}

RingElement dep(std::initializer_list<std::string> labels) {
  std::vector<std::string> v(labels);
  return dep(std::span<const std::string>(v));
}

RingElement dep(const SystemLayout& layout, std::span<const std::string> labels) {
  for (const auto& l : labels) layout.index_of(l);
  return dep(labels);
}

RingElement dep_all(const SystemLayout& layout) {
  const auto labels = layout.labels();
  return dep(std::span<const std::string>(labels));
}

RingElement eliminate_trivial(const RingElement& r, const SystemLayout& layout) {
  RingElement out;
  for (const auto& [m, c] : r.terms()) {
    Monomial kept;
    for (const auto& l : m)
      if (layout.at(l).dim != 1) kept.push_back(l);
    RingElement::Terms one;
    one.emplace(std::move(kept), c);
    out = out + RingElement(std::move(one));
  }
  return out;
}

std::string to_string(const RingElement& r) {
  if (r.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : r.terms()) {
    Rational mag = c < Rational(0) ? -c : c;
    if (first) {
      if (c < Rational(0)) os << '-';
    } else {
      os << (c < Rational(0) ? " - " : " + ");
    }
    first = false;
    const bool unit_coeff = mag == Rational(1);
    if (m.empty()) {
      os << mag.numerator();
      if (mag.denominator() != 1) os << '/' << mag.denominator();
      continue;
    }
    if (!unit_coeff) {
      os << mag.numerator();
      if (mag.denominator() != 1) os << '/' << mag.denominator();
      os << '*';
    }
    for (std::size_t k = 0; k < m.size(); ++k) os << (k ? "*" : "") << m[k];
  }
  return os.str();
}

namespace {

class RingParser {
 public:
  explicit RingParser(std::string_view text) : s_(text) {}

  RingElement parse() {
    RingElement r = expr();
    skip();
    if (p_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("ring expression: " + what + " at column " + std::to_string(p_ + 1));
  }
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool eat(char c) {
    skip();
    if (p_ < s_.size() && s_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }
  static bool label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
  }

  RingElement expr() {
    RingElement r;
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    r = term();
    if (neg) r = -r;
    for (;;) {
      if (eat('+')) r = r + term();
      else if (eat('-')) r = r - term();
      else return r;
    }
  }

  RingElement term() {
    RingElement r = factor();
    while (eat('*')) r = r * factor();
    return r;
  }

  long long integer() {
    std::size_t start = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (start == p_) fail("expected integer");
    try {
      return std::stoll(std::string(s_.substr(start, p_ - start)));
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }

  RingElement factor() {
    skip();
    if (p_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[p_];
    if (c == '(') {
      ++p_;
      RingElement r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == '-') {
      ++p_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long num = integer();
      long long den = 1;
      if (eat('/')) {
        skip();
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      return RingElement::constant(Rational(num, den));
    }
    if (label_char(c)) {
      std::size_t start = p_;
      while (p_ < s_.size() && label_char(s_[p_])) ++p_;
      std::string label(s_.substr(start, p_ - start));
      return dep({label});
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t p_ = 0;
};

}  // namespace

RingElement parse_ring(std::string_view text) { return RingParser(text).parse(); }

LabeledOperator apply(const RingElement& r, const LabeledOperator& m) {
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(m.dim(), m.dim());
  for (const auto& [mono, c] : r.terms()) {
    const double w = boost::rational_cast<double>(c);
    acc += w * depolarize(m, std::span<const std::string>(mono)).matrix();
  }
  return {m.layout(), std::move(acc)};
}

KeepSet::KeepSet(SystemLayout layout, const RingElement& r) : layout_(std::move(layout)) {
  if (layout_.size() > 63) throw TooLarge("keep-set supports at most 63 subsystems");
  for (const auto& [mono, c] : r.terms()) {
    std::uint64_t mask = 0;
    for (const auto& l : mono) mask |= std::uint64_t{1} << layout_.index_of(l);
    masks_.emplace_back(mask, c);
  }
  const std::size_t n = layout_.size();
  if (n <= kMaxTableSubsystems) {
    table_.resize(std::size_t{1} << n);
    for (std::uint64_t z = 0; z < table_.size(); ++z) table_[z] = pattern_sum(z) == Rational(1);
  }
}

Rational KeepSet::pattern_sum(std::uint64_t zero_mask) const {
  Rational s(0);
  for (const auto& [mask, c] : masks_)
    if ((mask & ~zero_mask) == 0) s += c;
  return s;
}

bool KeepSet::keeps_pattern(std::uint64_t zero_mask) const {
  // Trivial subsystems only carry the identity element.
  for (std::size_t k = 0; k < layout_.size(); ++k)
    if (layout_[k].dim == 1) zero_mask |= std::uint64_t{1} << k;
  if (!table_.empty()) return table_[zero_mask] != 0;
  return pattern_sum(zero_mask) == Rational(1);
}

bool KeepSet::contains(const MultiIndex& index) const {
  if (index.size() != layout_.size())
    throw BadIndex("multi-index has " + std::to_string(index.size()) +
                   " components, layout has " + std::to_string(layout_.size()));
  std::uint64_t z = 0;
  for (std::size_t k = 0; k < index.size(); ++k) {
    const int d = layout_[k].dim;
    if (index[k] < 0 || index[k] >= d * d) throw BadIndex("sub-index out of range");
    if (index[k] == 0) z |= std::uint64_t{1} << k;
  }
  return keeps_pattern(z);
}

std::uint64_t KeepSet::universe_size() const {
  std::uint64_t n = 1;
  for (const auto& s : layout_) n *= static_cast<std::uint64_t>(s.dim) * s.dim;
  return n;
}

std::uint64_t KeepSet::count() const {
  const std::size_t n = layout_.size();
  if (n > 24) throw TooLarge("too many subsystems to count keep-set members");
  std::uint64_t total = 0;
  for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
    std::uint64_t ways = 1;
    for (std::size_t k = 0; k < n && ways; ++k)
      if (!(z >> k & 1)) ways *= static_cast<std::uint64_t>(layout_[k].dim) * layout_[k].dim - 1;
    if (ways && keeps_pattern(z)) total += ways;
  }
  return total;
}

std::vector<MultiIndex> KeepSet::enumerate(bool kept) const {
  const std::uint64_t total = universe_size();
  if (total > (std::uint64_t{1} << 24)) throw TooLarge("keep-set too large to enumerate");
  std::vector<MultiIndex> out;
  MultiIndex index(layout_.size(), 0);
  for (std::uint64_t flat = 0; flat < total; ++flat) {
    std::uint64_t rest = flat;
    for (std::size_t k = layout_.size(); k-- > 0;) {
      const auto d2 = static_cast<std::uint64_t>(layout_[k].dim) * layout_[k].dim;
      index[k] = static_cast<int>(rest % d2);
      rest /= d2;
    }
    if (contains(index) == kept) out.push_back(index);
  }
  return out;
}

KeepSet to_keep_set(const RingElement& r, const SystemLayout& layout) {
  if (!r.is_idempotent()) throw NotAProjector(to_string(r) + " is not idempotent");
  return KeepSet(layout, r);
}

KeepSet to_keep_set(const RingElement& r, const HsBasis& basis) {
  return to_keep_set(r, basis.layout());
}

RingElement proj_union(const RingElement& a, const RingElement& b) {
  if (!a.is_idempotent()) throw NotAProjector(to_string(a) + " is not idempotent");
  if (!b.is_idempotent()) throw NotAProjector(to_string(b) + " is not idempotent");
  return a + b - a * b;
}

RingElement proj_intersect(const RingElement& a, const RingElement& b) {
  if (!a.is_idempotent()) throw NotAProjector(to_string(a) + " is not idempotent");
  if (!b.is_idempotent()) throw NotAProjector(to_string(b) + " is not idempotent");
  return a * b;
}

bool is_self_adjoint_projector(const RingElement& r, const SystemLayout& layout,
                               std::uint64_t seed, int trials, double tol) {
  if (!r.is_idempotent()) return false;
  for (const auto& l : r.labels())
    if (!layout.contains(l)) return false;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const LabeledOperator m = random_operator(layout, rng);
    const LabeledOperator n = random_operator(layout, rng);
    const cplx lhs = hs_inner(m, mpmkit::apply(r, n));
    const cplx rhs = hs_inner(mpmkit::apply(r, m), n);
    if (std::abs(lhs - rhs) > tol * std::max(1.0, std::abs(lhs))) return false;
  }
  return true;
}

}  // namespace mpmkit
