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


#include "mpmkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>

#include "mpmkit/activation.hpp"
#include "mpmkit/comb.hpp"
#include "mpmkit/errors.hpp"
#include "mpmkit/fixtures.hpp"
#include "mpmkit/game.hpp"
#include "mpmkit/hs_basis.hpp"
#include "mpmkit/io.hpp"
#include "mpmkit/link.hpp"
#include "mpmkit/mpm.hpp"
#include "mpmkit/process.hpp"
#include "mpmkit/ring.hpp"

namespace mpmkit::cli {

namespace {

using io::Json;

struct Globals {
  double tol = 1e-9;
  std::string format = "json";
  std::string out_path;
  bool tol_given = false;
};

class Usage : public Error {
 public:
  using Error::Error;
};

void print_pretty(const Json& j, std::ostream& out) {
  const auto rows = [&](const Json& items) {
    for (const auto& c : items) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12g", c.value("residual", 0.0));
      out << (c.value("pass", false) ? "PASS  " : "FAIL  ") << c.value("name", std::string{})
          << "  " << buf;
      if (c.contains("detail")) out << "  (" << c["detail"].get<std::string>() << ")";
      out << '\n';
    }
  };
  if (j.is_object() && j.contains("checks")) {
    rows(j["checks"]);
    out << (j.value("valid", false) ? "valid\n" : "invalid\n");
    return;
  }
  if (j.is_object() && j.contains("stages")) {
    rows(j["stages"]);
    out << (j.value("ok", false) ? "ok\n" : "failed at " + j.value("failed_stage", std::string{}) + "\n");
    return;
  }
  out << j.dump(2) << '\n';
}

void emit(const Globals& g, const Json& j, std::ostream& out) {
  if (g.format == "pretty")
    print_pretty(j, out);
  else
    out << j.dump(2) << '\n';
}

// Reports always go to stdout; --out receives a copy.
void emit_report(const Globals& g, const Json& j, std::ostream& out) {
  emit(g, j, out);
  if (!g.out_path.empty()) io::write_text_file(g.out_path, j.dump(2));
}

// Artefacts (operators, expansions) go to --out when given, else stdout.
void emit_artefact(const Globals& g, const Json& j, std::ostream& out) {
  if (!g.out_path.empty())
    io::write_text_file(g.out_path, j.dump(2));
  else
    out << j.dump(2) << '\n';
}

LabeledOperator load_operator(const std::string& path) {
  return io::operator_from_json(io::read_json_file(path));
}

Scenario load_scenario(const std::string& path) {
  return io::scenario_from_json(io::read_json_file(path));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

// Groups operator labels into parties by their non-digit prefix: labels
// X(2j-2), X(2j-1) form node j of party X. Dimensions come from the layout.
Scenario infer_scenario(const SystemLayout& layout) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<Subsystem>> by_party;
  for (const auto& s : layout) {
    if (s.dim == 1 && s.label.starts_with('#')) continue;
    std::size_t cut = s.label.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(s.label[cut - 1]))) --cut;
    if (cut == s.label.size() || cut == 0)
      throw Usage("cannot infer node structure from label '" + s.label + "'; pass --scenario");
    const std::string party = s.label.substr(0, cut);
    if (!by_party.count(party)) order.push_back(party);
    by_party[party].push_back(s);
  }
  Scenario sc;
  for (const auto& party : order) {
    auto subs = by_party[party];
    std::sort(subs.begin(), subs.end(),
              [](const Subsystem& a, const Subsystem& b) { return natural_less(a.label, b.label); });
    if (subs.size() % 2 != 0)
      throw Usage("party '" + party + "' has an odd number of systems; pass --scenario");
    NodeSeq seq{party, {}};
    for (std::size_t k = 0; k < subs.size(); k += 2) {
      if (subs[k].label != party + std::to_string(k) || subs[k + 1].label != party + std::to_string(k + 1))
        throw Usage("labels of party '" + party + "' are not numbered 0.." +
                    std::to_string(subs.size() - 1) + "; pass --scenario");
      seq.nodes.push_back(make_node(subs[k].label, subs[k].dim, subs[k + 1].label, subs[k + 1].dim));
    }
    sc.parties.push_back(std::move(seq));
  }
  if (sc.parties.empty()) throw Usage("operator has no nontrivial systems");
  return sc;
}

LinearExtension parse_order(const Scenario& s, const std::string& text) {
  std::map<std::string, NodeRef> names;
  for (std::size_t p = 0; p < s.parties.size(); ++p)
    for (std::size_t n = 0; n < s.parties[p].nodes.size(); ++n) {
      const NodeRef ref{p, n};
      names[node_name(s, ref)] = ref;
      names[s.parties[p].party + std::to_string(n + 1)] = ref;
    }
  LinearExtension ext;
  for (const auto& tok : split(text, ',')) {
    auto it = names.find(tok);
    if (it == names.end()) throw Usage("unknown node '" + tok + "' in --order");
    if (std::find(ext.begin(), ext.end(), it->second) != ext.end())
      throw Usage("node '" + tok + "' appears twice in --order");
    ext.push_back(it->second);
  }
  if (ext.size() != s.node_count())
    throw Usage("--order names " + std::to_string(ext.size()) + " of " +
                std::to_string(s.node_count()) + " nodes");
  return ext;
}

// The comb a validate/project command refers to: an explicit order over the
// scenario's nodes, or the single party's own sequence.
NodeSeq resolve_comb(const Scenario& s, const std::string& order) {
  if (!order.empty()) return process_as_comb(s, parse_order(s, order));
  if (s.parties.size() != 1) throw Usage("several parties: pass --order to fix a causal order");
  return s.parties[0];
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"valid", false}, {"error", kind}, {"message", message}};
}

// ---------------------------------------------------------------------------

struct ValidateCombArgs {
  std::string m, order, scenario, method = "both";
};

int cmd_validate_comb(const Globals& g, const ValidateCombArgs& a, std::ostream& out) {
  const LabeledOperator m = load_operator(a.m);
  const Scenario s = a.scenario.empty() ? infer_scenario(m.layout()) : load_scenario(a.scenario);
  const NodeSeq seq = resolve_comb(s, a.order);
  Verdict v;
  const auto merge = [&v](const std::string& prefix, const Verdict& part) {
    for (const auto& c : part.checks) v.add(prefix + c.name, c.residual, c.pass);
  };
  if (a.method == "trace") {
    v = validate_comb_trace(m, seq, g.tol);
  } else if (a.method == "projective") {
    v = validate_comb_projective(m, seq, g.tol);
  } else {
    merge("trace.", validate_comb_trace(m, seq, g.tol));
    merge("projective.", validate_comb_projective(m, seq, g.tol));
  }
  emit_report(g, io::to_json(v), out);
  return v.valid ? kExitOk : kExitInvalid;
}

struct ValidateMpmArgs {
  std::string w, scenario;
};

int cmd_validate_mpm(const Globals& g, const ValidateMpmArgs& a, std::ostream& out) {
  const LabeledOperator w = load_operator(a.w);
  const Scenario s = a.scenario.empty() ? infer_scenario(w.layout()) : load_scenario(a.scenario);
  const Verdict v = validate_mpm(w, s, g.tol);
  emit_report(g, io::to_json(v), out);
  return v.valid ? kExitOk : kExitInvalid;
}

struct ProjectArgs {
  std::string m, ring, projector, scenario, order;
};

int cmd_project(const Globals& g, const ProjectArgs& a, std::ostream& out) {
  if (a.ring.empty() == a.projector.empty()) throw Usage("pass exactly one of --ring, --projector");
  std::optional<LabeledOperator> m;
  if (!a.m.empty()) m = load_operator(a.m);
  RingElement r;
  if (!a.ring.empty()) {
    r = parse_ring(a.ring);
  } else {
    Scenario s;
    if (!a.scenario.empty())
      s = load_scenario(a.scenario);
    else if (m)
      s = infer_scenario(m->layout());
    else
      throw Usage("--projector needs --scenario or --m");
    if (a.projector == "comb") {
      const NodeSeq seq = resolve_comb(s, a.order);
      r = eliminate_trivial(comb_projector(seq), seq.layout());
    }
    else if (a.projector == "affine")
      r = affine_comb_projector(s);
    else
      r = mpm_projector(s);
  }
  if (!m) {
    emit_report(g, Json{{"projector", to_string(r)}}, out);
    return kExitOk;
  }
  emit_artefact(g, io::to_json(mpmkit::apply(r, *m)), out);
  return kExitOk;
}

struct BornArgs {
  std::string w;
  std::vector<std::string> branches;
};

int cmd_born(const Globals& g, const BornArgs& a, std::ostream& out) {
  const LabeledOperator w = load_operator(a.w);
  std::vector<LabeledOperator> branches;
  for (const auto& path : a.branches) branches.push_back(load_operator(path));
  const cplx t = born_trace(w, branches);
  emit_report(g, Json{{"probability", io::number(t.real())}, {"trace", io::complex_number(t)}},
              out);
  return kExitOk;
}

struct LinkArgs {
  std::string a, b;
  std::vector<std::string> pairs;
};

int cmd_link(const Globals& g, const LinkArgs& a, std::ostream& out) {
  DualPairing pairing;
  for (const auto& p : a.pairs) {
    const auto parts = split(p, ':');
    if (parts.size() != 2) throw Usage("--pair expects X:Y, got '" + p + "'");
    pairing.emplace_back(parts[0], parts[1]);
  }
  const LabeledOperator r = link_product(load_operator(a.a), load_operator(a.b), pairing);
  emit_artefact(g, io::to_json(r), out);
  return kExitOk;
}

struct ExtendArgs {
  std::string w, scenario, scenario_out;
  std::vector<int> dims;
};

int cmd_extend(const Globals& g, const ExtendArgs& a, std::ostream& out) {
  const LabeledOperator w = load_operator(a.w);
  const Scenario s = a.scenario.empty() ? infer_scenario(w.layout()) : load_scenario(a.scenario);
  std::vector<int> dims = a.dims;
  if (dims.empty()) {
    std::size_t gaps = 0;
    for (const auto& p : s.parties) gaps += p.nodes.size() - 1;
    dims.assign(gaps, 2);
  }
  const auto [we, se] = extend_with_side_channels(w, s, dims);
  if (!a.scenario_out.empty()) io::write_text_file(a.scenario_out, io::to_json(se).dump(2));
  emit_artefact(g, io::to_json(we), out);
  return kExitOk;
}

struct ConditionArgs {
  std::string w, op, scenario;
};

int cmd_condition(const Globals& g, const ConditionArgs& a, std::ostream& out) {
  const LabeledOperator w = load_operator(a.w);
  const LabeledOperator op = load_operator(a.op);
  const Scenario rest = load_scenario(a.scenario);
  try {
    emit_artefact(g, io::to_json(conditional_pm(w, op, rest, g.tol)), out);
  } catch (const PostSelectionDetected& e) {
    emit(g, error_json("PostSelectionDetected", e.what()), out);
    return kExitInvalid;
  }
  return kExitOk;
}

struct ActivationArgs {
  int side_dim = 2;
  bool swapped = false;
};

int cmd_activation(const Globals& g, const ActivationArgs& a, std::ostream& out) {
  ActivationOptions opt;
  opt.side_dim = a.side_dim;
  opt.swapped_order = a.swapped;
  if (g.tol_given) opt.tol = g.tol;
  const ActivationReport r = activation_demo(opt);
  emit_report(g, io::to_json(r), out);
  return r.ok() ? kExitOk : kExitInvalid;
}

struct GameArgs {
  std::string preset, spec, w, roles;
};

int cmd_game(const Globals& g, const GameArgs& a, std::ostream& out) {
  if (a.preset.empty() == a.spec.empty()) throw Usage("pass exactly one of --preset, --spec");
  GameSpec game;
  if (!a.spec.empty())
    game = io::game_from_json(io::read_json_file(a.spec));
  else if (a.preset == "ocb")
    game = ocb_guess_game();
  else if (a.preset == "unseen")
    game = unseen_bit_game();
  else
    game = signalling_game();
  Json report{{"game", io::to_json(game)}, {"causal_bound", io::number(causal_bound_bruteforce(game))}};
  if (!a.w.empty()) {
    if (a.preset != "ocb") throw Usage("--w is only supported with --preset ocb");
    OcbRoles roles;
    if (!a.roles.empty()) {
      const auto r = split(a.roles, ',');
      if (r.size() != 4) throw Usage("--roles expects four labels: a_in,a_out,b_in,b_out");
      roles = OcbRoles{r[0], r[1], r[2], r[3]};
    }
    double value = 0.0;
    try {
      value = ocb_game_value(load_operator(a.w), roles, g.tol);
    } catch (const InvalidProcess& e) {
      emit(g, error_json("InvalidProcess", e.what()), out);
      return kExitInvalid;
    }
    report["value"] = io::number(value);
    report["gap"] = io::number(value - report["causal_bound"].get<double>());
  }
  emit_report(g, report, out);
  return kExitOk;
}

int cmd_extensions(const Globals& g, const std::string& scenario, std::ostream& out) {
  const Scenario s = load_scenario(scenario);
  const auto exts = linear_extensions(s);
  Json list = Json::array();
  for (const auto& ext : exts) {
    Json names = Json::array();
    for (const auto& ref : ext) names.push_back(node_name(s, ref));
    list.push_back(std::move(names));
  }
  emit_report(g, Json{{"count", exts.size()}, {"extensions", std::move(list)}}, out);
  return kExitOk;
}

struct RandomArgs {
  std::string kind = "comb", mode = "perturbation", scenario, party = "A";
  int nodes = 1, dim = 2, ancilla = 2;
  std::uint64_t seed = 0;
};

int cmd_random(const Globals& g, const RandomArgs& a, std::ostream& out) {
  Rng rng(a.seed);
  if (a.kind == "mpm") {
    if (a.scenario.empty()) throw Usage("--kind mpm needs --scenario");
    emit_artefact(g, io::to_json(random_valid_mpm(load_scenario(a.scenario), rng)), out);
    return kExitOk;
  }
  NodeSeq seq;
  if (!a.scenario.empty()) {
    const Scenario s = load_scenario(a.scenario);
    if (s.parties.size() != 1) throw Usage("--kind comb needs a single-party scenario");
    seq = s.parties[0];
  } else {
    seq = qubit_seq(a.party, a.nodes, a.dim);
  }
  RandomCombOptions opt;
  opt.mode = a.mode == "network" ? CombMode::Network : CombMode::Perturbation;
  opt.ancilla_dim = a.ancilla;
  emit_artefact(g, io::to_json(random_comb(seq, rng, opt)), out);
  return kExitOk;
}

struct FixtureArgs {
  std::string name;
  bool expansion = false;
};

int cmd_fixture(const Globals& g, const FixtureArgs& a, std::ostream& out) {
  static const std::map<std::string, HsExpansion (*)()> expansions = {
      {"w_ab", &fixtures::w_ab_expansion},
      {"forwarded", &fixtures::forwarded_expansion},
      {"ocb", [] { return fixtures::ocb_expansion(+1); }},
  };
  static const std::map<std::string, Scenario (*)()> scenarios = {
      {"a2b1", &fixtures::two_plus_one},
      {"activated", &fixtures::activated},
      {"ocb-scenario", &fixtures::ocb_scenario},
  };
  if (auto it = expansions.find(a.name); it != expansions.end()) {
    const HsExpansion e = it->second();
    if (a.expansion)
      emit_artefact(g, io::to_json(e), out);
    else
      emit_artefact(g, io::to_json(reconstruct(e, default_basis(e.layout))), out);
    return kExitOk;
  }
  if (auto it = scenarios.find(a.name); it != scenarios.end()) {
    if (a.expansion) throw Usage("'" + a.name + "' is a scenario; --expansion does not apply");
    emit_artefact(g, io::to_json(it->second()), out);
    return kExitOk;
  }
  throw Usage("unknown fixture '" + a.name + "'");
}

int cmd_reconstruct(const Globals& g, const std::string& path, std::ostream& out) {
  const HsExpansion e = io::expansion_from_json(io::read_json_file(path));
  emit_artefact(g, io::to_json(reconstruct(e, default_basis(e.layout))), out);
  return kExitOk;
}

std::string error_kind(const Error& e) {
#define MPMKIT_KIND(Name) \
  if (dynamic_cast<const Name*>(&e)) return #Name;
  MPMKIT_KIND(LabelCollision)
  MPMKIT_KIND(UnknownSubsystem)
  MPMKIT_KIND(LayoutMismatch)
  MPMKIT_KIND(NotHermitian)
  MPMKIT_KIND(UnsupportedDimension)
  MPMKIT_KIND(BadIndex)
  MPMKIT_KIND(NotAProjector)
  MPMKIT_KIND(TooManyNodes)
  MPMKIT_KIND(PairingMismatch)
  MPMKIT_KIND(PostSelectionDetected)
  MPMKIT_KIND(InvalidProcess)
  MPMKIT_KIND(TooLarge)
  MPMKIT_KIND(DimensionError)
  MPMKIT_KIND(ParseError)
#undef MPMKIT_KIND
  return "Usage";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Validity checks and constructions for quantum combs and multi-round processes",
               "mpmkit"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Globals g;
  app.add_option("--tol", g.tol, "Numerical tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", g.format, "Report format")
      ->check(CLI::IsMember({"json", "pretty"}))
      ->capture_default_str();
  app.add_option("--out", g.out_path, "Output file");

  ValidateCombArgs vc;
  auto* c_vc = app.add_subcommand("validate-comb", "Check that an operator is a deterministic comb");
  c_vc->add_option("--m", vc.m, "Operator JSON")->required();
  c_vc->add_option("--order", vc.order, "Causal order of nodes, e.g. A2,B,A1");
  c_vc->add_option("--scenario", vc.scenario, "Scenario JSON (default: inferred from labels)");
  c_vc->add_option("--method", vc.method)->check(CLI::IsMember({"both", "trace", "projective"}));

  ValidateMpmArgs vm;
  auto* c_vm = app.add_subcommand("validate-mpm", "Check that an operator is a valid MPM");
  c_vm->add_option("--w", vm.w, "Operator JSON")->required();
  c_vm->add_option("--scenario", vm.scenario, "Scenario JSON (default: inferred from labels)");

  ProjectArgs pr;
  auto* c_pr = app.add_subcommand("project", "Apply a projector; without --m print its ring form");
  c_pr->add_option("--m", pr.m, "Operator JSON");
  c_pr->add_option("--ring", pr.ring, "Ring expression, e.g. '1 - A1 + A0*A1'");
  c_pr->add_option("--projector", pr.projector)->check(CLI::IsMember({"comb", "affine", "mpm"}));
  c_pr->add_option("--scenario", pr.scenario, "Scenario JSON");
  c_pr->add_option("--order", pr.order, "Causal order for --projector comb");

  BornArgs bo;
  auto* c_bo = app.add_subcommand("born", "Generalized Born rule");
  c_bo->add_option("--w", bo.w, "Process JSON")->required();
  c_bo->add_option("--branch", bo.branches, "One operation per party (repeatable)")->required();

  LinkArgs li;
  auto* c_li = app.add_subcommand("link", "Link product of two operators");
  c_li->add_option("--a", li.a)->required();
  c_li->add_option("--b", li.b)->required();
  c_li->add_option("--pair", li.pairs, "Contracted pair X:Y (repeatable)");

  ExtendArgs ex;
  auto* c_ex = app.add_subcommand("extend", "Add side channels between consecutive nodes");
  c_ex->add_option("--w", ex.w, "Process JSON")->required();
  c_ex->add_option("--scenario", ex.scenario, "Scenario JSON (default: inferred from labels)");
  c_ex->add_option("--dim", ex.dims, "Side-channel dimension per gap (default 2)");
  c_ex->add_option("--scenario-out", ex.scenario_out, "Write the extended scenario here");

  ConditionArgs co;
  auto* c_co = app.add_subcommand("condition", "Condition a process on a first operation");
  c_co->add_option("--w", co.w, "Process JSON")->required();
  c_co->add_option("--op", co.op, "Operation JSON")->required();
  c_co->add_option("--scenario", co.scenario, "Remaining scenario JSON")->required();

  ActivationArgs ac;
  auto* c_ac = app.add_subcommand("activation", "Replay the side-channel activation example");
  c_ac->add_option("--side-dim", ac.side_dim)->capture_default_str();
  c_ac->add_flag("--swapped", ac.swapped, "Declare A's nodes in swapped order");

  GameArgs ga;
  auto* c_ga = app.add_subcommand("game", "Causal bound of a game, optionally a process value");
  c_ga->add_option("--preset", ga.preset)->check(CLI::IsMember({"ocb", "unseen", "signalling"}));
  c_ga->add_option("--spec", ga.spec, "GameSpec JSON");
  c_ga->add_option("--w", ga.w, "Bipartite process JSON (preset ocb)");
  c_ga->add_option("--roles", ga.roles, "a_in,a_out,b_in,b_out (default L2,A3,B0,B1)");

  std::string ext_scenario;
  auto* c_le = app.add_subcommand("extensions", "List linear extensions of a scenario");
  c_le->add_option("--scenario", ext_scenario)->required();

  RandomArgs ra;
  auto* c_ra = app.add_subcommand("random", "Sample a random comb or MPM");
  c_ra->add_option("--kind", ra.kind)->check(CLI::IsMember({"comb", "mpm"}))->capture_default_str();
  c_ra->add_option("--mode", ra.mode)
      ->check(CLI::IsMember({"perturbation", "network"}))
      ->capture_default_str();
  c_ra->add_option("--scenario", ra.scenario);
  c_ra->add_option("--party", ra.party)->capture_default_str();
  c_ra->add_option("--nodes", ra.nodes)->check(CLI::Range(1, 8))->capture_default_str();
  c_ra->add_option("--dim", ra.dim)->check(CLI::Range(1, 16))->capture_default_str();
  c_ra->add_option("--ancilla-dim", ra.ancilla)->check(CLI::Range(1, 16))->capture_default_str();
  c_ra->add_option("--seed", ra.seed)->capture_default_str();

  FixtureArgs fx;
  auto* c_fx = app.add_subcommand("fixture", "Emit a bundled operator or scenario");
  c_fx->add_option("--name", fx.name, "w_ab | forwarded | ocb | a2b1 | activated | ocb-scenario")
      ->required();
  c_fx->add_flag("--expansion", fx.expansion, "Emit the Pauli expansion instead");

  std::string rc_path;
  auto* c_rc = app.add_subcommand("reconstruct", "Rebuild an operator from its expansion");
  c_rc->add_option("--expansion", rc_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  g.tol_given = app.get_option("--tol")->count() > 0;

  try {
    if (c_vc->parsed()) return cmd_validate_comb(g, vc, out);
    if (c_vm->parsed()) return cmd_validate_mpm(g, vm, out);
    if (c_pr->parsed()) return cmd_project(g, pr, out);
    if (c_bo->parsed()) return cmd_born(g, bo, out);
    if (c_li->parsed()) return cmd_link(g, li, out);
    if (c_ex->parsed()) return cmd_extend(g, ex, out);
    if (c_co->parsed()) return cmd_condition(g, co, out);
    if (c_ac->parsed()) return cmd_activation(g, ac, out);
    if (c_ga->parsed()) return cmd_game(g, ga, out);
    if (c_le->parsed()) return cmd_extensions(g, ext_scenario, out);
    if (c_ra->parsed()) return cmd_random(g, ra, out);
    if (c_fx->parsed()) return cmd_fixture(g, fx, out);
    if (c_rc->parsed()) return cmd_reconstruct(g, rc_path, out);
  } catch (const Error& e) {
    err << "error (" << error_kind(e) << "): " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mpmkit::cli
