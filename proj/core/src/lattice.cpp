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

#include "cgeo/lattice.hpp"

namespace cgeo {

CoverRelation covers_of(const ClosureSystem& system) {
  const auto& masks = system.family().masks();
  const int m = static_cast<int>(masks.size());
  CoverRelation rel;
  rel.upper.resize(m);
  rel.lower.resize(m);

  // Canonical order sorts by cardinality, so a strict subset always comes
  // earlier; only i < j can satisfy masks[i] strictly inside masks[j].
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if ((masks[i] & ~masks[j]) != 0) continue;  // not a subset
      bool gap = false;
      for (int k = i + 1; k < j && !gap; ++k) {
        if ((masks[i] & ~masks[k]) == 0 && (masks[k] & ~masks[j]) == 0 &&
            masks[k] != masks[i] && masks[k] != masks[j]) {
          gap = true;
        }
      }
      if (!gap) {
        rel.pairs.emplace_back(i, j);
        rel.upper[i].push_back(j);
        rel.lower[j].push_back(i);
      }
    }
  }
  return rel;
}

std::vector<std::pair<Subset, Subset>> covering_pairs(
    const ClosureSystem& system) {
  const CoverRelation rel = covers_of(system);
  std::vector<std::pair<Subset, Subset>> out;
  out.reserve(rel.pairs.size());
  for (const auto& [lo, hi] : rel.pairs) {
    out.emplace_back(system.family().member(lo), system.family().member(hi));
  }
  return out;
}

Irreducibles irreducibles(const ClosureSystem& system) {
  const CoverRelation rel = covers_of(system);
  std::vector<std::uint64_t> join_irr;
  std::vector<std::uint64_t> meet_irr;
  for (int i = 0; i < system.size(); ++i) {
    if (rel.lower[i].size() == 1) join_irr.push_back(system.family().mask(i));
    if (rel.upper[i].size() == 1) meet_irr.push_back(system.family().mask(i));
  }
  return Irreducibles{SetFamily(system.ground(), std::move(join_irr)),
                      SetFamily(system.ground(), std::move(meet_irr))};
}

}  // namespace cgeo
