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


#include "mpmkit/game.hpp"

#include <algorithm>
#include <cmath>

#include "mpmkit/errors.hpp"
#include "mpmkit/mpm.hpp"
#include "mpmkit/process.hpp"

namespace mpmkit {

std::size_t GameSpec::table_size() const {
  std::size_t n = static_cast<std::size_t>(hidden);
  for (const auto& p : parties) n *= static_cast<std::size_t>(p.settings);
  for (const auto& p : parties) n *= static_cast<std::size_t>(p.outcomes);
  return n;
}

std::size_t GameSpec::index(int hidden_value, std::span<const int> settings,
                            std::span<const int> outcomes) const {
  std::size_t i = static_cast<std::size_t>(hidden_value);
  for (std::size_t k = 0; k < parties.size(); ++k)
    i = i * parties[k].settings + static_cast<std::size_t>(settings[k]);
  for (std::size_t k = 0; k < parties.size(); ++k)
    i = i * parties[k].outcomes + static_cast<std::size_t>(outcomes[k]);
  return i;
}

void GameSpec::check() const {
  if (parties.empty()) throw ParseError("game has no parties");
  if (hidden < 1) throw ParseError("hidden alphabet must be nonempty");
  for (const auto& p : parties)
    if (p.settings < 1 || p.outcomes < 1)
      throw ParseError("party '" + p.label + "' has an empty alphabet");
  if (success.size() != table_size())
    throw ParseError("success table has " + std::to_string(success.size()) + " entries, expected " +
                     std::to_string(table_size()));
}

namespace {

struct CausalSearch {
  const GameSpec& game;
  std::vector<int> settings, outcomes;

  double terminal() const {
    double acc = 0.0;
    for (int h = 0; h < game.hidden; ++h)
      acc += game.success[game.index(h, settings, outcomes)];
    return acc / game.hidden;
  }

  double value(std::size_t acted) {
    const std::size_t n = game.parties.size();
    if (acted == n) return terminal();
    double best = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      if (settings[x] >= 0) continue;
      const GameParty& p = game.parties[x];
      double avg = 0.0;
      for (int s = 0; s < p.settings; ++s) {
        settings[x] = s;
        double top = 0.0;
        for (int o = 0; o < p.outcomes; ++o) {
          outcomes[x] = o;
          top = std::max(top, value(acted + 1));
        }
        avg += top;
      }
      settings[x] = -1;
      outcomes[x] = -1;
      best = std::max(best, avg / p.settings);
    }
    return best;
  }
};

}  // namespace

double causal_bound_bruteforce(const GameSpec& game) {
  game.check();
  if (static_cast<int>(game.parties.size()) > kMaxGameParties)
    throw TooLarge("at most " + std::to_string(kMaxGameParties) + " parties");
  if (game.hidden > kMaxAlphabet) throw TooLarge("hidden alphabet too large");
  for (const auto& p : game.parties)
    if (p.settings > kMaxAlphabet || p.outcomes > kMaxAlphabet)
      throw TooLarge("alphabet of party '" + p.label + "' too large");
  const std::size_t n = game.parties.size();
  CausalSearch search{game, std::vector<int>(n, -1), std::vector<int>(n, -1)};
  return search.value(0);
}

GameSpec ocb_guess_game() {
  GameSpec g{{{"A", 4, 2}, {"B", 2, 2}}, 1, {}};
  g.success.assign(g.table_size(), 0);
  for (int a = 0; a < 4; ++a)
    for (int y = 0; y < 2; ++y)
      for (int oa = 0; oa < 2; ++oa)
        for (int ob = 0; ob < 2; ++ob) {
          const int x = a % 2, s = a / 2;
          const bool win = s == 0 ? oa == y : ob == x;
          const int set[] = {a, y}, out[] = {oa, ob};
          g.success[g.index(0, set, out)] = win;
        }
  return g;
}

GameSpec unseen_bit_game() {
  GameSpec g{{{"A", 1, 2}}, 2, {}};
  g.success.assign(g.table_size(), 0);
  for (int h = 0; h < 2; ++h)
    for (int o = 0; o < 2; ++o) {
      const int set[] = {0}, out[] = {o};
      g.success[g.index(h, set, out)] = o == h;
    }
  return g;
}

GameSpec signalling_game() {
  GameSpec g{{{"A", 2, 1}, {"B", 1, 2}}, 1, {}};
  g.success.assign(g.table_size(), 0);
  for (int x = 0; x < 2; ++x)
    for (int ob = 0; ob < 2; ++ob) {
      const int set[] = {x, 0}, out[] = {0, ob};
      g.success[g.index(0, set, out)] = ob == x;
    }
  return g;
}

double ocb_game_value(const LabeledOperator& w, const OcbRoles& roles, double tol) {
  const Scenario s{{NodeSeq{"A", {make_node(roles.a_in, 2, roles.a_out, 2)}},
                    NodeSeq{"B", {make_node(roles.b_in, 2, roles.b_out, 2)}}}};
  LabeledOperator ws;
  try {
    ws = conform_to(w, s.layout());
  } catch (const LayoutMismatch& e) {
    throw InvalidProcess(std::string("not a two-qubit-per-side process: ") + e.what());
  }
  if (!validate_mpm(ws, s, tol).valid) throw InvalidProcess("operator is not a valid process");

  const SystemLayout a_in({Subsystem{roles.a_in, 2, Role::Input}});
  const SystemLayout a_out({Subsystem{roles.a_out, 2, Role::DualOutput}});
  const SystemLayout b_in({Subsystem{roles.b_in, 2, Role::Input}});
  const SystemLayout b_out({Subsystem{roles.b_out, 2, Role::DualOutput}});
  const double r = 1.0 / std::sqrt(2.0);
  const Eigen::Vector2cd z[2] = {{1.0, 0.0}, {0.0, 1.0}};
  const Eigen::Vector2cd xb[2] = {{r, r}, {r, -r}};

  const GameSpec game = ocb_guess_game();
  double value = 0.0;
  for (int a = 0; a < 4; ++a) {
    const int x = a % 2, sel = a / 2;
    for (int y = 0; y < 2; ++y)
      for (int oa = 0; oa < 2; ++oa) {
        const LabeledOperator ma =
            sel == 0 ? measure_prepare_choi(a_in, z[oa], a_out, z[0])
                     : measure_prepare_choi(a_in, xb[oa], a_out, z[x ^ oa]);
        for (int ob = 0; ob < 2; ++ob) {
          const LabeledOperator mb = measure_prepare_choi(b_in, z[ob], b_out, z[y]);
          const int set[] = {a, y}, out[] = {oa, ob};
          if (!game.success[game.index(0, set, out)]) continue;
          value += born_probability(ws, {ma, mb}) / 8.0;
        }
      }
  }
  return value;
}

}  // namespace mpmkit
