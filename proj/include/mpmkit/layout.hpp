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

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mpmkit {

/// Whether a tensor factor is a node input, the dual of a node output, or
/// an auxiliary system that belongs to neither.
enum class Role { Input, DualOutput, Ancilla };

std::string_view to_string(Role role);
Role role_from_string(std::string_view text);

struct Subsystem {
  std::string label;
  int dim = 1;
  Role role = Role::Ancilla;

  friend bool operator==(const Subsystem&, const Subsystem&) = default;
};

/// Ordered list of labelled tensor factors. The order fixes the Kronecker
/// order of every operator defined on the layout: the last factor varies
/// fastest in a flat row/column index.
class SystemLayout {
 public:
  SystemLayout() = default;
  explicit SystemLayout(std::vector<Subsystem> subsystems);

  std::size_t size() const { return subsystems_.size(); }
  bool empty() const { return subsystems_.empty(); }
  const Subsystem& operator[](std::size_t i) const { return subsystems_[i]; }
  const std::vector<Subsystem>& subsystems() const { return subsystems_; }
  auto begin() const { return subsystems_.begin(); }
  auto end() const { return subsystems_.end(); }

  Eigen::Index total_dim() const { return total_dim_; }
  std::vector<int> dims() const;
  std::vector<std::string> labels() const;

  bool contains(std::string_view label) const;
  std::optional<std::size_t> find(std::string_view label) const;
  /// Position of `label`; throws UnknownSubsystem when absent.
  std::size_t index_of(std::string_view label) const;
  const Subsystem& at(std::string_view label) const;

  /// Product of the dimensions of the listed labels.
  Eigen::Index dim_of(std::span<const std::string> labels) const;
  Eigen::Index input_dim() const;
  Eigen::Index output_dim() const;

  /// This layout followed by `other`; throws LabelCollision on overlap.
  SystemLayout concat(const SystemLayout& other) const;
  /// Subsystems in the order given by `labels`.
  SystemLayout select(std::span<const std::string> labels) const;
  SystemLayout without(std::span<const std::string> labels) const;

  /// Same label set with the same dims and roles, in any order.
  bool same_systems(const SystemLayout& other) const;

  friend bool operator==(const SystemLayout& a, const SystemLayout& b) {
    return a.subsystems_ == b.subsystems_;
  }

 private:
  std::vector<Subsystem> subsystems_;
  Eigen::Index total_dim_ = 1;
};

namespace detail {

/// Flat offsets into a layout with factor dims `dims` for every joint value
/// of the factors at `positions`, enumerated in mixed radix over those
/// positions (last listed position fastest). The other factors are held at 0.
std::vector<Eigen::Index> factor_offsets(std::span<const int> dims,
                                         std::span<const std::size_t> positions);

std::vector<std::size_t> complement(std::size_t n,
                                    std::span<const std::size_t> positions);

}  // namespace detail

}  // namespace mpmkit
