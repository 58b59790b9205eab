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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mpmkit/operator.hpp"

namespace mpmkit {

struct GameParty {
  std::string label;
  int settings = 2;
  int outcomes = 2;
};

/// Guessing game with uniformly random settings and an optional hidden
/// referee variable (uniform over `hidden` values) that no party sees.
/// `success` is a 0/1 truth table indexed in mixed radix over
/// (hidden, settings in party order, outcomes in party order), last fastest.
struct GameSpec {
  std::vector<GameParty> parties;
  int hidden = 1;
  std::vector<std::uint8_t> success;

  std::size_t table_size() const;
  std::size_t index(int hidden_value, std::span<const int> settings,
                    std::span<const int> outcomes) const;
  /// Throws ParseError on a malformed table or alphabet.
  void check() const;
};

inline constexpr int kMaxGameParties = 3;
inline constexpr int kMaxAlphabet = 4;

/// Best success probability over deterministic causal strategies: the next
/// party to act may depend on everything already revealed, and each party's
/// outcome on its own setting and all earlier settings and outcomes. Throws
/// TooLarge beyond kMaxGameParties parties or kMaxAlphabet symbols.
double causal_bound_bruteforce(const GameSpec& game);

/// A holds settings (x, s) encoded as x + 2s, B holds y. For s = 0, A must
/// output y; for s = 1, B must output x.
GameSpec ocb_guess_game();
/// One party guessing a hidden uniform bit.
GameSpec unseen_bit_game();
/// B must output A's setting.
GameSpec signalling_game();

/// Systems of the two single-node parties of the OCB scenario.
struct OcbRoles {
  std::string a_in = "L2";
  std::string a_out = "A3";
  std::string b_in = "B0";
  std::string b_out = "B1";
};

/// Success probability of ocb_guess_game with fixed strategies. B measures
/// sigma_z on b_in (its guess) and prepares |y> on b_out. For s = 0, A
/// measures sigma_z on a_in (its guess) and prepares |0>; for s = 1, A
/// measures sigma_x on a_in with result k and prepares |x xor k>. Throws
/// InvalidProcess unless `w` is a valid two-qubit-per-side process.
double ocb_game_value(const LabeledOperator& w, const OcbRoles& roles = {}, double tol = 1e-9);

}  // namespace mpmkit
