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


#include "mpmkit/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mpmkit/errors.hpp"

namespace mpmkit::io {

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

Json number(double x) { return round12(x); }

Json complex_number(cplx z) { return Json::array({number(z.real()), number(z.imag())}); }

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<int>();
}

double as_double(const Json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  return j.get<double>();
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

cplx as_complex(const Json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw ParseError(where + ": expected [re, im]");
  return {as_double(j[0], where + "[0]"), as_double(j[1], where + "[1]")};
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  return j;
}

}  // namespace

Json layout_to_json(const SystemLayout& layout) {
  Json out = Json::array();
  for (const auto& s : layout)
    out.push_back(Json{{"label", s.label}, {"dim", s.dim}, {"role", std::string(to_string(s.role))}});
  return out;
}

SystemLayout layout_from_json(const Json& j) {
  const Json& arr = as_array(j, "subsystems");
  std::vector<Subsystem> subs;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string where = "subsystems[" + std::to_string(k) + "]";
    Subsystem s;
    s.label = as_string(field(arr[k], "label", where), where + ".label");
    s.dim = as_int(field(arr[k], "dim", where), where + ".dim");
    if (arr[k].contains("role")) s.role = role_from_string(as_string(arr[k]["role"], where + ".role"));
    subs.push_back(std::move(s));
  }
  return SystemLayout(std::move(subs));
}

Json to_json(const LabeledOperator& m) {
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < m.dim(); ++r)
    for (Eigen::Index c = 0; c < m.dim(); ++c) entries.push_back(complex_number(m.matrix()(r, c)));
  return Json{{"subsystems", layout_to_json(m.layout())}, {"entries", std::move(entries)}};
}

LabeledOperator operator_from_json(const Json& j) {
  const SystemLayout layout = layout_from_json(field(j, "subsystems", "operator"));
  const Json& entries = as_array(field(j, "entries", "operator"), "entries");
  const Eigen::Index d = layout.total_dim();
  if (static_cast<Eigen::Index>(entries.size()) != d * d)
    throw ParseError("entries: expected " + std::to_string(d * d) + " values, got " +
                     std::to_string(entries.size()));
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index k = 0; k < d * d; ++k)
    m(k / d, k % d) = as_complex(entries[static_cast<std::size_t>(k)],
                                 "entries[" + std::to_string(k) + "]");
  return {layout, std::move(m)};
}

Json to_json(const HsExpansion& e) {
  Json coeffs = Json::array();
  for (const auto& [index, value] : e.coeffs)
    coeffs.push_back(Json{{"index", index}, {"value", complex_number(value)}});
  return Json{{"subsystems", layout_to_json(e.layout)}, {"coeffs", std::move(coeffs)}};
}

HsExpansion expansion_from_json(const Json& j) {
  HsExpansion e{layout_from_json(field(j, "subsystems", "expansion")), {}};
  const Json& coeffs = as_array(field(j, "coeffs", "expansion"), "coeffs");
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const std::string where = "coeffs[" + std::to_string(k) + "]";
    const Json& idx = as_array(field(coeffs[k], "index", where), where + ".index");
    MultiIndex index;
    for (std::size_t q = 0; q < idx.size(); ++q)
      index.push_back(as_int(idx[q], where + ".index[" + std::to_string(q) + "]"));
    e.coeffs[index] += as_complex(field(coeffs[k], "value", where), where + ".value");
  }
  return e;
}

namespace {

Json labels_json(const std::vector<Subsystem>& v, bool dims) {
  if (v.size() == 1) return dims ? Json(v[0].dim) : Json(v[0].label);
  Json out = Json::array();
  for (const auto& s : v) out.push_back(dims ? Json(s.dim) : Json(s.label));
  return out;
}

std::vector<Subsystem> systems_from_json(const Json& node, const char* lkey, const char* dkey,
                                         Role role, const std::string& where) {
  const Json& lj = field(node, lkey, where);
  std::vector<std::string> labels;
  if (lj.is_array()) {
    for (std::size_t k = 0; k < lj.size(); ++k)
      labels.push_back(as_string(lj[k], where + "." + lkey + "[" + std::to_string(k) + "]"));
  } else {
    labels.push_back(as_string(lj, where + "." + lkey));
  }
  std::vector<int> dims;
  if (node.contains(dkey)) {
    const Json& dj = node[dkey];
    if (dj.is_array()) {
      for (std::size_t k = 0; k < dj.size(); ++k)
        dims.push_back(as_int(dj[k], where + "." + dkey + "[" + std::to_string(k) + "]"));
      if (dims.size() != labels.size())
        throw ParseError(where + ": \"" + dkey + "\" and \"" + lkey + "\" differ in length");
    } else {
      dims.assign(labels.size(), as_int(dj, where + "." + dkey));
    }
  } else {
    dims.assign(labels.size(), 2);
  }
  std::vector<Subsystem> out;
  for (std::size_t k = 0; k < labels.size(); ++k) out.push_back(Subsystem{labels[k], dims[k], role});
  return out;
}

}  // namespace

Json to_json(const Scenario& s) {
  Json parties = Json::array();
  for (const auto& p : s.parties) {
    Json nodes = Json::array();
    for (const auto& n : p.nodes)
      nodes.push_back(Json{{"in", labels_json(n.inputs, false)},
                           {"out", labels_json(n.outputs, false)},
                           {"din", labels_json(n.inputs, true)},
                           {"dout", labels_json(n.outputs, true)}});
    parties.push_back(Json{{"label", p.party}, {"nodes", std::move(nodes)}});
  }
  return Json{{"parties", std::move(parties)}};
}

Scenario scenario_from_json(const Json& j) {
  Scenario s;
  const Json& parties = as_array(field(j, "parties", "scenario"), "parties");
  if (parties.empty()) throw ParseError("parties: a scenario needs at least one party");
  for (std::size_t p = 0; p < parties.size(); ++p) {
    const std::string where = "parties[" + std::to_string(p) + "]";
    NodeSeq seq;
    seq.party = as_string(field(parties[p], "label", where), where + ".label");
    const Json& nodes = as_array(field(parties[p], "nodes", where), where + ".nodes");
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const std::string nw = where + ".nodes[" + std::to_string(k) + "]";
      seq.nodes.push_back(Node{systems_from_json(nodes[k], "in", "din", Role::Input, nw),
                               systems_from_json(nodes[k], "out", "dout", Role::DualOutput, nw)});
    }
    s.parties.push_back(std::move(seq));
  }
  s.layout();
  return s;
}

Json to_json(const Verdict& v) {
  Json checks = Json::array();
  for (const auto& c : v.checks)
    checks.push_back(Json{{"name", c.name}, {"residual", number(c.residual)}, {"pass", c.pass}});
  return Json{{"valid", v.valid}, {"checks", std::move(checks)}};
}

Json to_json(const ActivationReport& r) {
  Json stages = Json::array();
  for (const auto& s : r.stages) {
    Json st{{"name", s.name}, {"residual", number(s.residual)}, {"pass", s.pass}};
    if (!s.detail.empty()) st["detail"] = s.detail;
    stages.push_back(std::move(st));
  }
  Json out{{"ok", r.ok()}, {"stages", std::move(stages)}};
  if (!r.failed_stage.empty()) out["failed_stage"] = r.failed_stage;
  if (r.game_value != 0.0 || r.causal_bound != 0.0) {
    out["game_value"] = number(r.game_value);
    out["causal_bound"] = number(r.causal_bound);
  }
  return out;
}

Json to_json(const GameSpec& g) {
  Json parties = Json::array();
  for (const auto& p : g.parties)
    parties.push_back(Json{{"label", p.label}, {"settings", p.settings}, {"outcomes", p.outcomes}});
  Json success = Json::array();
  for (auto v : g.success) success.push_back(static_cast<int>(v));
  return Json{{"parties", std::move(parties)}, {"hidden", g.hidden}, {"success", std::move(success)}};
}

GameSpec game_from_json(const Json& j) {
  GameSpec g;
  const Json& parties = as_array(field(j, "parties", "game"), "parties");
  for (std::size_t p = 0; p < parties.size(); ++p) {
    const std::string where = "parties[" + std::to_string(p) + "]";
    GameParty gp;
    gp.label = as_string(field(parties[p], "label", where), where + ".label");
    gp.settings = as_int(field(parties[p], "settings", where), where + ".settings");
    gp.outcomes = as_int(field(parties[p], "outcomes", where), where + ".outcomes");
    g.parties.push_back(std::move(gp));
  }
  if (j.contains("hidden")) g.hidden = as_int(j["hidden"], "hidden");
  const Json& success = as_array(field(j, "success", "game"), "success");
  for (std::size_t k = 0; k < success.size(); ++k) {
    const std::string where = "success[" + std::to_string(k) + "]";
    const Json& v = success[k];
    if (v.is_boolean()) g.success.push_back(v.get<bool>());
    else g.success.push_back(as_int(v, where) != 0);
  }
  g.check();
  return g;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into line:column.
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": malformed JSON");
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot write file");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

}  // namespace mpmkit::io
