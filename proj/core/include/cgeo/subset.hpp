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

#ifndef CGEO_SUBSET_HPP_
#define CGEO_SUBSET_HPP_

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cgeo/ground_set.hpp"

namespace cgeo {

// Canonical order on subset masks: smaller cardinality first, ties broken
// by the lowest-index element the two sets do not share (the set that
// contains it comes first). This is the order used everywhere a family,
// a witness search or a serialized document lists subsets.
inline bool canonical_less(std::uint64_t a, std::uint64_t b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  if (a == b) return false;
  const std::uint64_t diff = a ^ b;
  return ((a >> std::countr_zero(diff)) & 1u) != 0;
}

/**
 * Subset of a ground set, stored as a bit mask over element indices.
 *
 * A subset is bound to the ground set it was built from; combining subsets
 * of different ground sets raises GroundMismatchError. Value type, cheap to
 * copy.
 */
class Subset {
 public:
  Subset(GroundSet ground, std::uint64_t bits);

  static Subset empty_set(GroundSet ground) { return Subset(ground, 0); }
  static Subset full_set(GroundSet ground) {
    const std::uint64_t full = ground.full_mask();
    return Subset(std::move(ground), full);
  }
  // Throws std::invalid_argument on an unknown or repeated label.
  static Subset of_labels(GroundSet ground,
                          const std::vector<std::string>& labels);

  const GroundSet& ground() const { return ground_; }
  std::uint64_t bits() const { return bits_; }

  int cardinality() const { return std::popcount(bits_); }
  bool is_empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == ground_.full_mask(); }
  bool contains(int element) const { return ((bits_ >> element) & 1u) != 0; }

  Subset with(int element) const;
  Subset without(int element) const;

  Subset intersect(const Subset& other) const;
  Subset unite(const Subset& other) const;
  Subset minus(const Subset& other) const;
  bool subset_of(const Subset& other) const;

  bool operator==(const Subset& other) const {
    return bits_ == other.bits_ && ground_ == other.ground_;
  }
  bool operator!=(const Subset& other) const { return !(*this == other); }

  // Element indices in increasing order.
  std::vector<int> elements() const;
  // Labels of the members, in element index order.
  std::vector<std::string> member_labels() const;

 private:
  GroundSet ground_;
  std::uint64_t bits_;
};

inline bool canonical_less(const Subset& a, const Subset& b) {
  return canonical_less(a.bits(), b.bits());
}

// Renders as {a, b, c} for diagnostics and test failure messages.
std::string to_string(const Subset& s);
std::ostream& operator<<(std::ostream& os, const Subset& s);

}  // namespace cgeo

#endif  // CGEO_SUBSET_HPP_
