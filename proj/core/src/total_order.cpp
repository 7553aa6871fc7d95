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

#include "cgeo/total_order.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace cgeo {

TotalOrder::TotalOrder(GroundSet ground, std::vector<int> perm)
    : ground_(std::move(ground)), perm_(std::move(perm)) {
  const int n = ground_.size();
  if (static_cast<int>(perm_.size()) != n) {
    throw std::invalid_argument("order must list every element exactly once");
  }
  rank_.assign(n, -1);
  for (int r = 0; r < n; ++r) {
    const int e = perm_[r];
    if (e < 0 || e >= n || rank_[e] != -1) {
      throw std::invalid_argument("order is not a permutation of the ground set");
    }
    rank_[e] = r;
  }
}

TotalOrder TotalOrder::identity(GroundSet ground) {
  std::vector<int> perm(ground.size());
  std::iota(perm.begin(), perm.end(), 0);
  return TotalOrder(std::move(ground), std::move(perm));
}

TotalOrder TotalOrder::of_labels(GroundSet ground,
                                 const std::vector<std::string>& labels) {
  std::vector<int> perm;
  perm.reserve(labels.size());
  for (const auto& label : labels) {
    const auto index = ground.index_of(label);
    if (!index) {
      throw std::invalid_argument("unknown label '" + label + "'");
    }
    perm.push_back(*index);
  }
  return TotalOrder(std::move(ground), std::move(perm));
}

std::uint64_t TotalOrder::prefix_mask(int k) const {
  std::uint64_t bits = 0;
  for (int r = 0; r < k; ++r) {
    bits |= std::uint64_t{1} << perm_.at(r);
  }
  return bits;
}

Subset TotalOrder::prefix(int k) const {
  return Subset(ground_, prefix_mask(k));
}

std::vector<std::string> TotalOrder::element_labels() const {
  std::vector<std::string> out;
  out.reserve(perm_.size());
  for (int e : perm_) out.push_back(ground_.label(e));
  return out;
}

std::string to_string(const TotalOrder& order) {
  std::string out = "(";
  const auto labels = order.element_labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ", ";
    out += labels[i];
  }
  out += ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const TotalOrder& order) {
  return os << to_string(order);
}

}  // namespace cgeo
