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

#include <string>
#include <vector>

namespace mpmkit {

struct Stage {
  std::string name;
  double residual = 0.0;
  bool pass = false;
  std::string detail;
};

struct ActivationReport {
  std::vector<Stage> stages;
  /// Name of the first failing stage, empty when every stage passed.
  std::string failed_stage;
  double game_value = 0.0;
  double causal_bound = 0.0;

  bool ok() const { return failed_stage.empty(); }
};

struct ActivationOptions {
  /// Side-channel dimension between A's two nodes.
  int side_dim = 2;
  /// Declare A's nodes in the order A(2) < A(1) and check the comb order
  /// A1 < B < A2 instead; the pipeline stops after the validation stages.
  bool swapped_order = false;
  double tol = 1e-10;
  /// Required margin of the game value over the causal bound.
  double margin = 0.09;
};

/// Replays the side-channel activation example end to end: validates the
/// three-node process, extends it with a side channel, conditions on the
/// forwarding operation, splits on the sigma_z outcome at A2, and plays the
/// guessing game on the resulting bipartite process. Matrix comparisons are
/// absolute Frobenius distances.
ActivationReport activation_demo(const ActivationOptions& options = {});

}  // namespace mpmkit
