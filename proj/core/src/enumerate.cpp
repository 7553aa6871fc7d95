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

#include "cgeo/enumerate.hpp"

#include <numeric>

#include "cgeo/errors.hpp"

namespace cgeo {

std::vector<ClosureSystem> enumerate_closure_systems(const GroundSet& ground,
                                                     bool require_zero) {
  const int n = ground.size();
  if (n > kMaxSystemEnumeration) {
    throw GuardError("enumerate_closure_systems refuses ground sets larger "
                     "than " +
                     std::to_string(kMaxSystemEnumeration) + " elements");
  }
  const std::uint64_t full = ground.full_mask();

  // Candidate members besides the forced ones: all proper subsets, or all
  // proper nonempty subsets when the empty set is forced in.
  std::vector<std::uint64_t> pool;
  for (std::uint64_t m = require_zero ? 1 : 0; m < full; ++m) {
    pool.push_back(m);
  }

  std::vector<bool> present(static_cast<std::size_t>(full) + 1, false);
  std::vector<ClosureSystem> out;
  const std::uint64_t selections = std::uint64_t{1} << pool.size();
  for (std::uint64_t pick = 0; pick < selections; ++pick) {
    std::vector<std::uint64_t> masks;
    masks.push_back(full);
    if (require_zero) masks.push_back(0);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if ((pick >> i) & 1u) masks.push_back(pool[i]);
    }
    for (std::uint64_t m : masks) present[m] = true;
    bool stable = true;
    for (std::size_t i = 0; i < masks.size() && stable; ++i) {
      for (std::size_t j = i + 1; j < masks.size(); ++j) {
        if (!present[masks[i] & masks[j]]) {
          stable = false;
          break;
        }
      }
    }
    for (std::uint64_t m : masks) present[m] = false;
    if (stable) {
      out.push_back(ClosureSystem::from_family(SetFamily(ground, masks)));
    }
  }
  return out;
}

ClosureSystem random_closure_system(const GroundSet& ground, Rng& rng) {
  if (ground.size() > kMaxSubsetEnumeration) {
    throw GuardError("random_closure_system draws from all subsets, refusing "
                     "n > " +
                     std::to_string(kMaxSubsetEnumeration));
  }
  const std::uint64_t full = ground.full_mask();
  std::vector<std::uint64_t> masks{0, full};
  for (std::uint64_t m = 1; m < full; ++m) {
    if (rng.coin()) masks.push_back(m);
  }
  // Close under pairwise intersection so the draw is always a system.
  std::vector<bool> present(static_cast<std::size_t>(full) + 1, false);
  for (std::uint64_t m : masks) present[m] = true;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const std::uint64_t meet = masks[i] & masks[j];
      if (!present[meet]) {
        present[meet] = true;
        masks.push_back(meet);
      }
    }
  }
  return ClosureSystem::from_family(SetFamily(ground, std::move(masks)));
}

TotalOrder random_order(const GroundSet& ground, Rng& rng) {
  std::vector<int> perm(ground.size());
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  return TotalOrder(ground, std::move(perm));
}

}  // namespace cgeo
