// Copyright 2026 The Authors.
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

#include "cgeo/subset.hpp"

#include <ostream>
#include <stdexcept>

#include "cgeo/errors.hpp"

namespace cgeo {

Subset::Subset(GroundSet ground, std::uint64_t bits)
    : ground_(std::move(ground)), bits_(bits) {
  if ((bits_ & ~ground_.full_mask()) != 0) {
    throw std::invalid_argument("subset mask has bits outside the ground set");
  }
}

Subset Subset::of_labels(GroundSet ground,
                         const std::vector<std::string>& labels) {
  std::uint64_t bits = 0;
  for (const auto& label : labels) {
    const auto index = ground.index_of(label);
    if (!index) {
      throw std::invalid_argument("unknown label '" + label + "'");
    }
    const std::uint64_t bit = std::uint64_t{1} << *index;
    if ((bits & bit) != 0) {
      throw std::invalid_argument("repeated label '" + label + "'");
    }
    bits |= bit;
  }
  return Subset(std::move(ground), bits);
}

Subset Subset::with(int element) const {
  return Subset(ground_, bits_ | (std::uint64_t{1} << element));
}

Subset Subset::without(int element) const {
  return Subset(ground_, bits_ & ~(std::uint64_t{1} << element));
}

Subset Subset::intersect(const Subset& other) const {
  require_same_ground(ground_, other.ground_, "Subset::intersect");
  return Subset(ground_, bits_ & other.bits_);
}

Subset Subset::unite(const Subset& other) const {
  require_same_ground(ground_, other.ground_, "Subset::unite");
  return Subset(ground_, bits_ | other.bits_);
}

Subset Subset::minus(const Subset& other) const {
  require_same_ground(ground_, other.ground_, "Subset::minus");
  return Subset(ground_, bits_ & ~other.bits_);
}

bool Subset::subset_of(const Subset& other) const {
  require_same_ground(ground_, other.ground_, "Subset::subset_of");
  return (bits_ & ~other.bits_) == 0;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  for (int i = 0; i < ground_.size(); ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::vector<std::string> Subset::member_labels() const {
  std::vector<std::string> out;
  for (int i = 0; i < ground_.size(); ++i) {
    if (contains(i)) out.push_back(ground_.label(i));
  }
  return out;
}

std::string to_string(const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& label : s.member_labels()) {
    if (!first) out += ", ";
    out += label;
    first = false;
  }
  out += "}";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Subset& s) {
  return os << to_string(s);
}

}  // namespace cgeo
