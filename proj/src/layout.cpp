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


#include "mpmkit/layout.hpp"

#include <algorithm>
#include <set>

#include "mpmkit/errors.hpp"

namespace mpmkit {

std::string_view to_string(Role role) {
  switch (role) {
    case Role::Input:
      return "input";
    case Role::DualOutput:
      return "dual_output";
    case Role::Ancilla:
      return "ancilla";
  }
  return "ancilla";
}

Role role_from_string(std::string_view text) {
  if (text == "input" || text == "in" || text == "Input") return Role::Input;
  if (text == "dual_output" || text == "out" || text == "output" ||
      text == "DualOutput")
    return Role::DualOutput;
  if (text == "ancilla" || text == "Ancilla") return Role::Ancilla;
  throw ParseError("unknown subsystem role '" + std::string(text) + "'");
}

SystemLayout::SystemLayout(std::vector<Subsystem> subsystems)
    : subsystems_(std::move(subsystems)) {
  std::set<std::string_view> seen;
  for (const auto& s : subsystems_) {
    if (s.dim < 1) throw DimensionError("subsystem '" + s.label + "' has dim < 1");
    if (!seen.insert(s.label).second)
      throw LabelCollision("duplicate subsystem label '" + s.label + "'");
    total_dim_ *= s.dim;
  }
}

std::vector<int> SystemLayout::dims() const {
  std::vector<int> out;
  out.reserve(size());
  for (const auto& s : subsystems_) out.push_back(s.dim);
  return out;
}

std::vector<std::string> SystemLayout::labels() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (const auto& s : subsystems_) out.push_back(s.label);
  return out;
}

bool SystemLayout::contains(std::string_view label) const {
  return find(label).has_value();
}

std::optional<std::size_t> SystemLayout::find(std::string_view label) const {
  for (std::size_t i = 0; i < subsystems_.size(); ++i)
    if (subsystems_[i].label == label) return i;
  return std::nullopt;
}

std::size_t SystemLayout::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw UnknownSubsystem("no subsystem labelled '" + std::string(label) + "'");
}

const Subsystem& SystemLayout::at(std::string_view label) const {
  return subsystems_[index_of(label)];
}

Eigen::Index SystemLayout::dim_of(std::span<const std::string> labels) const {
  Eigen::Index d = 1;
  for (const auto& l : labels) d *= at(l).dim;
  return d;
}

Eigen::Index SystemLayout::input_dim() const {
  Eigen::Index d = 1;
  for (const auto& s : subsystems_)
    if (s.role == Role::Input) d *= s.dim;
  return d;
}

Eigen::Index SystemLayout::output_dim() const {
  Eigen::Index d = 1;
  for (const auto& s : subsystems_)
    if (s.role == Role::DualOutput) d *= s.dim;
  return d;
}

SystemLayout SystemLayout::concat(const SystemLayout& other) const {
  std::vector<Subsystem> all = subsystems_;
  all.insert(all.end(), other.subsystems_.begin(), other.subsystems_.end());
  return SystemLayout(std::move(all));
}

SystemLayout SystemLayout::select(std::span<const std::string> labels) const {
  std::vector<Subsystem> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(at(l));
  return SystemLayout(std::move(out));
}

SystemLayout SystemLayout::without(std::span<const std::string> labels) const {
  for (const auto& l : labels) index_of(l);
  std::vector<Subsystem> out;
  for (const auto& s : subsystems_)
    if (std::find(labels.begin(), labels.end(), s.label) == labels.end())
      out.push_back(s);
  return SystemLayout(std::move(out));
}

bool SystemLayout::same_systems(const SystemLayout& other) const {
  if (size() != other.size()) return false;
  for (const auto& s : subsystems_) {
    auto i = other.find(s.label);
    if (!i || other[*i] != s) return false;
  }
  return true;
}

namespace detail {

std::vector<Eigen::Index> factor_offsets(std::span<const int> dims,
                                         std::span<const std::size_t> positions) {
  std::vector<Eigen::Index> strides(dims.size(), 1);
  for (std::size_t p = dims.size(); p-- > 1;)
    strides[p - 1] = strides[p] * dims[p];

  std::vector<Eigen::Index> offsets{0};
  for (std::size_t pos : positions) {
    std::vector<Eigen::Index> next;
    next.reserve(offsets.size() * dims[pos]);
    for (Eigen::Index base : offsets)
      for (int v = 0; v < dims[pos]; ++v) next.push_back(base + v * strides[pos]);
    offsets = std::move(next);
  }
  return offsets;
}

std::vector<std::size_t> complement(std::size_t n,
                                    std::span<const std::size_t> positions) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < n; ++p)
    if (std::find(positions.begin(), positions.end(), p) == positions.end())
      out.push_back(p);
  return out;
}

}  // namespace detail

}  // namespace mpmkit
