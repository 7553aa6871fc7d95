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

#ifndef CGEO_SET_FAMILY_HPP_
#define CGEO_SET_FAMILY_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cgeo/subset.hpp"

namespace cgeo {

/**
 * Finite family of subsets of one ground set, kept in canonical order
 * (cardinality first, then the lowest-index tie break of canonical_less)
 * with no duplicate members. Construction canonicalizes whatever it is
 * given, so equal families compare equal member by member.
 */
class SetFamily {
 public:
  SetFamily(GroundSet ground, std::vector<std::uint64_t> masks);

  static SetFamily of(GroundSet ground, const std::vector<Subset>& members);

  const GroundSet& ground() const { return ground_; }
  int size() const { return static_cast<int>(masks_.size()); }
  bool empty() const { return masks_.empty(); }

  std::uint64_t mask(int i) const { return masks_.at(i); }
  Subset member(int i) const { return Subset(ground_, masks_.at(i)); }
  const std::vector<std::uint64_t>& masks() const { return masks_; }

  bool contains_mask(std::uint64_t mask) const;
  bool contains(const Subset& s) const;
  // Index of the mask in canonical order, or -1 when absent.
  int index_of_mask(std::uint64_t mask) const;

  // True when every member of this family is a member of other.
  bool subfamily_of(const SetFamily& other) const;

  bool operator==(const SetFamily& other) const {
    return ground_ == other.ground_ && masks_ == other.masks_;
  }
  bool operator!=(const SetFamily& other) const { return !(*this == other); }

 private:
  GroundSet ground_;
  std::vector<std::uint64_t> masks_;
};

std::string to_string(const SetFamily& family);
std::ostream& operator<<(std::ostream& os, const SetFamily& family);

}  // namespace cgeo

#endif  // CGEO_SET_FAMILY_HPP_
