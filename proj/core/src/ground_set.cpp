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

#include "cgeo/ground_set.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_set>

#include "cgeo/errors.hpp"

namespace cgeo {

GroundSet::GroundSet(std::vector<std::string> labels) {
  if (labels.empty()) {
    throw std::invalid_argument("ground set must not be empty");
  }
  if (labels.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    throw std::invalid_argument("ground set holds at most " +
                                std::to_string(kMaxGroundSize) + " elements");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (label.empty()) {
      throw std::invalid_argument("ground set label must not be empty");
    }
    if (!seen.insert(label).second) {
      throw std::invalid_argument("duplicate ground set label '" + label +
                                  "'");
    }
  }
  data_ = std::make_shared<const Data>(Data{std::move(labels)});
}

GroundSet GroundSet::numbered(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n > 0 ? n : 0));
  for (int i = 1; i <= n; ++i) {
    labels.push_back(std::to_string(i));
  }
  return GroundSet(std::move(labels));
}

std::optional<int> GroundSet::index_of(std::string_view label) const {
  const auto& labels = data_->labels;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::uint64_t GroundSet::full_mask() const {
  const int n = size();
  if (n == kMaxGroundSize) return ~std::uint64_t{0};
  return (std::uint64_t{1} << n) - 1;
}

bool GroundSet::operator==(const GroundSet& other) const {
  return data_ == other.data_ || data_->labels == other.data_->labels;
}

void require_same_ground(const GroundSet& a, const GroundSet& b,
                         const char* where) {
  if (a.same_object(b) || a == b) return;
  throw GroundMismatchError(std::string(where) +
                            ": arguments use different ground sets");
}

}  // namespace cgeo
