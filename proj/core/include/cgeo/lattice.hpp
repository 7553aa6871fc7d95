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

#ifndef CGEO_LATTICE_HPP_
#define CGEO_LATTICE_HPP_

#include <utility>
#include <vector>

#include "cgeo/closure_system.hpp"

namespace cgeo {

// Covering relation of the closed-set lattice, indexed by the position of
// each member in the family's canonical order.
struct CoverRelation {
  // (lower, upper) index pairs, sorted by lower then upper.
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> upper;  // upper[i]: covers above member i
  std::vector<std::vector<int>> lower;  // lower[i]: covers below member i
};

CoverRelation covers_of(const ClosureSystem& system);

// The covering pairs as subsets, in canonical order of (lower, upper).
std::vector<std::pair<Subset, Subset>> covering_pairs(
    const ClosureSystem& system);

struct Irreducibles {
  SetFamily join_irreducible;  // members with exactly one lower cover
  SetFamily meet_irreducible;  // members with exactly one upper cover
};

Irreducibles irreducibles(const ClosureSystem& system);

}  // namespace cgeo

#endif  // CGEO_LATTICE_HPP_
