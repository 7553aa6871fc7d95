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

#ifndef CGEO_GROUND_SET_HPP_
#define CGEO_GROUND_SET_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cgeo {

// Subsets are stored as one machine word, so a ground set holds at most 64
// elements. Everything downstream that enumerates subsets carries much
// tighter guards anyway.
inline constexpr int kMaxGroundSize = 64;

/**
 * Finite, nonempty, ordered set of labelled elements.
 *
 * The label order is fixed at construction and gives every element a stable
 * index; subsets, families, orders and chains all refer to elements by that
 * index. Copies share the underlying data, so passing GroundSet by value is
 * cheap. Two ground sets are equal when their label sequences are equal.
 */
class GroundSet {
 public:
  // Throws std::invalid_argument on an empty list, an empty or duplicate
  // label, or more than kMaxGroundSize labels.
  explicit GroundSet(std::vector<std::string> labels);

  // Ground set labelled "1", "2", ..., "n".
  static GroundSet numbered(int n);

  int size() const { return static_cast<int>(data_->labels.size()); }
  const std::string& label(int i) const { return data_->labels.at(i); }
  const std::vector<std::string>& labels() const { return data_->labels; }

  std::optional<int> index_of(std::string_view label) const;

  // Mask with every element present.
  std::uint64_t full_mask() const;

  bool operator==(const GroundSet& other) const;
  bool operator!=(const GroundSet& other) const { return !(*this == other); }

  // True when both refer to the same underlying storage. Used as a fast
  // path before the deep comparison.
  bool same_object(const GroundSet& other) const {
    return data_ == other.data_;
  }

 private:
  struct Data {
    std::vector<std::string> labels;
  };
  std::shared_ptr<const Data> data_;
};

// Throws GroundMismatchError unless the two ground sets are equal.
void require_same_ground(const GroundSet& a, const GroundSet& b,
                         const char* where);

}  // namespace cgeo

#endif  // CGEO_GROUND_SET_HPP_
