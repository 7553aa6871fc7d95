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

#include "cgeo/set_family.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "cgeo/errors.hpp"

namespace cgeo {

SetFamily::SetFamily(GroundSet ground, std::vector<std::uint64_t> masks)
    : ground_(std::move(ground)), masks_(std::move(masks)) {
  const std::uint64_t full = ground_.full_mask();
  for (std::uint64_t m : masks_) {
    if ((m & ~full) != 0) {
      throw std::invalid_argument(
          "family member has bits outside the ground set");
    }
  }
  std::sort(masks_.begin(), masks_.end(),
            [](std::uint64_t a, std::uint64_t b) { return canonical_less(a, b); });
  masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

SetFamily SetFamily::of(GroundSet ground, const std::vector<Subset>& members) {
  std::vector<std::uint64_t> masks;
  masks.reserve(members.size());
  for (const auto& member : members) {
    require_same_ground(ground, member.ground(), "SetFamily::of");
    masks.push_back(member.bits());
  }
  return SetFamily(std::move(ground), std::move(masks));
}

int SetFamily::index_of_mask(std::uint64_t mask) const {
  const auto it = std::lower_bound(
      masks_.begin(), masks_.end(), mask,
      [](std::uint64_t a, std::uint64_t b) { return canonical_less(a, b); });
  if (it != masks_.end() && *it == mask) {
    return static_cast<int>(it - masks_.begin());
  }
  return -1;
}

bool SetFamily::contains_mask(std::uint64_t mask) const {
  return index_of_mask(mask) >= 0;
}

bool SetFamily::contains(const Subset& s) const {
  require_same_ground(ground_, s.ground(), "SetFamily::contains");
  return contains_mask(s.bits());
}

bool SetFamily::subfamily_of(const SetFamily& other) const {
  require_same_ground(ground_, other.ground_, "SetFamily::subfamily_of");
  // Both mask lists are sorted in the same canonical order.
  std::size_t j = 0;
  for (std::uint64_t m : masks_) {
    while (j < other.masks_.size() && canonical_less(other.masks_[j], m)) ++j;
    if (j == other.masks_.size() || other.masks_[j] != m) return false;
  }
  return true;
}

std::string to_string(const SetFamily& family) {
  std::string out = "{";
  for (int i = 0; i < family.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(family.member(i));
  }
  out += "}";
  return out;
}

std::ostream& operator<<(std::ostream& os, const SetFamily& family) {
  return os << to_string(family);
}

}  // namespace cgeo
