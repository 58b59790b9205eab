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

#include <json.hpp>

#include <string>

#include "mpmkit/activation.hpp"
#include "mpmkit/comb.hpp"
#include "mpmkit/game.hpp"
#include "mpmkit/hs_basis.hpp"
#include "mpmkit/mpm.hpp"
#include "mpmkit/operator.hpp"

namespace mpmkit::io {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits; negative zero becomes zero.
double round12(double x);
Json number(double x);
Json complex_number(cplx z);

/// {"subsystems": [{"label", "dim", "role"}...], "entries": [[re, im]...]},
/// entries row-major in layout order.
Json to_json(const LabeledOperator& m);
LabeledOperator operator_from_json(const Json& j);

Json layout_to_json(const SystemLayout& layout);
SystemLayout layout_from_json(const Json& j);

/// The layout block plus {"coeffs": [{"index": [...], "value": [re, im]}...]}.
Json to_json(const HsExpansion& e);
HsExpansion expansion_from_json(const Json& j);

/// {"parties": [{"label", "nodes": [{"in", "out", "din", "dout"}...]}...]};
/// "in"/"out" may be a label or a list of labels, "din"/"dout" a dimension
/// or a list of dimensions.
Json to_json(const Scenario& s);
Scenario scenario_from_json(const Json& j);

Json to_json(const Verdict& v);
Json to_json(const ActivationReport& r);

/// {"parties": [{"label", "settings", "outcomes"}...], "hidden": n,
///  "success": [0/1 ...]}
Json to_json(const GameSpec& g);
GameSpec game_from_json(const Json& j);

/// Throws ParseError naming the file and the position of a syntax error.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace mpmkit::io
