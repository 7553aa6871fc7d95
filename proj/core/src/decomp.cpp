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

#include "cgeo/decomp.hpp"

#include <algorithm>
#include <stdexcept>

#include "cgeo/enumerate.hpp"
#include "cgeo/errors.hpp"
#include "cgeo/lattice.hpp"
#include "cgeo/rng.hpp"

namespace cgeo {

namespace {

ClosureSystem join_of_ideals(const GroundSet& ground,
                             const std::vector<TotalOrder>& orders) {
  std::vector<ClosureSystem> systems;
  systems.reserve(orders.size());
  for (const auto& o : orders) systems.push_back(ideal_geometry(o).system());
  if (systems.empty()) {
    // Join of nothing: the smallest zero-closed system.
    return ClosureSystem::from_family(
        SetFamily(ground, {0, ground.full_mask()}));
  }
  return join_systems(systems);
}

Decomposition verified_decomposition(const ConvexGeometry& g,
                                     std::vector<TotalOrder> orders,
                                     const char* where) {
  for (const auto& o : orders) {
    if (!is_compatible(o, g.system())) {
      throw InternalConsistencyError(std::string(where) +
                                     ": produced an incompatible order");
    }
  }
  if (join_of_ideals(g.ground(), orders).family() != g.family()) {
    throw InternalConsistencyError(
        std::string(where) +
        ": reconstruction does not give back the source family");
  }
  return Decomposition{g, std::move(orders), true};
}

}  // namespace

Decomposition ej_decompose(const ConvexGeometry& g, DecomposeMode mode) {
  if (mode == DecomposeMode::All) {
    return verified_decomposition(g, compatible_orders(g), "ej_decompose");
  }

  // One maximal chain through every closed set: walk down to the empty set
  // and up to the full set along covers, picking the canonically first
  // cover at each step.
  const ClosureSystem& system = g.system();
  const CoverRelation rel = covers_of(system);
  std::vector<TotalOrder> orders;
  for (int target = 0; target < system.size(); ++target) {
    std::vector<int> below{target};
    while (!rel.lower[below.back()].empty()) {
      below.push_back(rel.lower[below.back()].front());
    }
    std::reverse(below.begin(), below.end());
    while (!rel.upper[below.back()].empty()) {
      below.push_back(rel.upper[below.back()].front());
    }
    std::vector<std::uint64_t> sets;
    sets.reserve(below.size());
    for (int i : below) sets.push_back(system.family().mask(i));
    orders.push_back(
        order_from_chain(Chain::in_system(system, std::move(sets)), g));
  }
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  return verified_decomposition(g, std::move(orders), "ej_decompose");
}

ConvexGeometry reconstruct(const Decomposition& d) {
  std::vector<ConvexGeometry> ideals;
  ideals.reserve(d.orders.size());
  for (const auto& o : d.orders) ideals.push_back(ideal_geometry(o));
  if (ideals.empty()) {
    throw std::invalid_argument("reconstruct needs at least one order");
  }
  return join_geometries(ideals);
}

Decomposition min_order_cover(const ConvexGeometry& g, CoverMode mode) {
  const std::vector<TotalOrder> all = compatible_orders(g);
  const int m = static_cast<int>(all.size());

  if (mode == CoverMode::Exact) {
    if (m > kMaxExactCoverOrders) {
      throw GuardError("min_order_cover exact mode refuses more than " +
                       std::to_string(kMaxExactCoverOrders) +
                       " compatible orders");
    }
    // Subsets by ascending size, each size in lexicographic order over the
    // canonical order list; the first subset that reconstructs the source
    // is the answer, so ties break toward the canonical first.
    std::vector<int> pick;
    std::vector<TotalOrder> chosen;
    for (int k = 1; k <= m; ++k) {
      pick.assign(k, 0);
      for (int i = 0; i < k; ++i) pick[i] = i;
      while (true) {
        chosen.clear();
        for (int i : pick) chosen.push_back(all[i]);
        if (join_of_ideals(g.ground(), chosen).family() == g.family()) {
          return verified_decomposition(g, std::move(chosen),
                                        "min_order_cover");
        }
        int i = k - 1;
        while (i >= 0 && pick[i] == m - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    throw InternalConsistencyError(
        "min_order_cover: no subset of compatible orders reconstructs the "
        "geometry, not even all of them");
  }

  // Greedy set cover over the meet-irreducible closed sets. Covering all
  // of them is enough: every closed set is an intersection of
  // meet-irreducible ones, and joins are intersection stable.
  const SetFamily meet_irr = irreducibles(g.system()).meet_irreducible;
  const int targets = meet_irr.size();
  std::vector<std::vector<bool>> covers(all.size(),
                                        std::vector<bool>(targets, false));
  for (std::size_t i = 0; i < all.size(); ++i) {
    const SetFamily ideals = ideal_geometry(all[i]).family();
    for (int t = 0; t < targets; ++t) {
      covers[i][t] = ideals.contains_mask(meet_irr.mask(t));
    }
  }
  std::vector<bool> covered(targets, false);
  int remaining = targets;
  std::vector<TotalOrder> chosen;
  std::vector<bool> used(all.size(), false);
  while (remaining > 0) {
    int best = -1;
    int best_gain = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (used[i]) continue;
      int gain = 0;
      for (int t = 0; t < targets; ++t) {
        if (!covered[t] && covers[i][t]) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) {
      throw InternalConsistencyError(
          "min_order_cover: a meet-irreducible closed set lies on no "
          "compatible order");
    }
    used[best] = true;
    chosen.push_back(all[best]);
    for (int t = 0; t < targets; ++t) {
      if (covers[best][t] && !covered[t]) {
        covered[t] = true;
        --remaining;
      }
    }
  }
  if (chosen.empty()) {
    // No meet-irreducible sets at all: a single compatible order carries
    // the whole family (the one-element ground set).
    chosen.push_back(all.front());
  }
  return verified_decomposition(g, std::move(chosen), "min_order_cover");
}

ConvexGeometry random_geometry(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < 1) {
    throw std::invalid_argument("random_geometry needs n >= 1 and k >= 1");
  }
  const GroundSet ground = GroundSet::numbered(n);
  Rng rng(seed);
  std::vector<ConvexGeometry> ideals;
  ideals.reserve(k);
  for (int i = 0; i < k; ++i) {
    ideals.push_back(ideal_geometry(random_order(ground, rng)));
  }
  return join_geometries(ideals);
}

}  // namespace cgeo
