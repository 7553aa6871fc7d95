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

#ifndef CGEO_TOTAL_ORDER_HPP_
#define CGEO_TOTAL_ORDER_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "cgeo/subset.hpp"

namespace cgeo {

/**
 * Total order on a ground set, stored as the permutation of element indices
 * listed from least to greatest. prefix(k) is the set of the first k
 * elements; the n+1 prefixes are exactly the downsets of the order.
 */
class TotalOrder {
 public:
  // perm must be a permutation of 0..n-1, else std::invalid_argument.
  TotalOrder(GroundSet ground, std::vector<int> perm);

  static TotalOrder identity(GroundSet ground);
  // Throws std::invalid_argument unless labels is a permutation of the
  // ground set labels.
  static TotalOrder of_labels(GroundSet ground,
                              const std::vector<std::string>& labels);

  const GroundSet& ground() const { return ground_; }
  int size() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }

  int element_at(int rank) const { return perm_.at(rank); }
  int rank_of(int element) const { return rank_.at(element); }

  Subset prefix(int k) const;
  std::uint64_t prefix_mask(int k) const;

  std::vector<std::string> element_labels() const;

  bool operator==(const TotalOrder& other) const {
    return ground_ == other.ground_ && perm_ == other.perm_;
  }
  bool operator!=(const TotalOrder& other) const { return !(*this == other); }

  // Canonical comparison: lexicographic on the permutation.
  bool operator<(const TotalOrder& other) const { return perm_ < other.perm_; }

 private:
  GroundSet ground_;
  std::vector<int> perm_;
  std::vector<int> rank_;
};

std::string to_string(const TotalOrder& order);
std::ostream& operator<<(std::ostream& os, const TotalOrder& order);

}  // namespace cgeo

#endif  // CGEO_TOTAL_ORDER_HPP_
