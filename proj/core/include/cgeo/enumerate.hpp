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

#ifndef CGEO_ENUMERATE_HPP_
#define CGEO_ENUMERATE_HPP_

#include <vector>

#include "cgeo/closure_system.hpp"
#include "cgeo/rng.hpp"
#include "cgeo/total_order.hpp"

namespace cgeo {

// Ground sets small enough to enumerate every closure system: the search
// space is 2^(2^n - 2) candidate families.
inline constexpr int kMaxSystemEnumeration = 4;

// Every closure system on the ground set, i.e. every intersection-stable
// family containing the full set (and the empty set when require_zero).
// GuardError above kMaxSystemEnumeration elements.
std::vector<ClosureSystem> enumerate_closure_systems(const GroundSet& ground,
                                                     bool require_zero);

// Random closure system: a uniformly drawn subfamily of the proper
// nonempty subsets, closed under intersection, plus the empty and full
// sets. Every zero-closed system on the ground set has positive probability.
ClosureSystem random_closure_system(const GroundSet& ground, Rng& rng);

// Uniformly random permutation of the ground set.
TotalOrder random_order(const GroundSet& ground, Rng& rng);

}  // namespace cgeo

#endif  // CGEO_ENUMERATE_HPP_
