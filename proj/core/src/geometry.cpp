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

#include "cgeo/geometry.hpp"

#include <stdexcept>

#include "cgeo/errors.hpp"
#include "cgeo/lattice.hpp"

namespace cgeo {

namespace detail {
ConvexGeometry trusted_geometry(ClosureSystem system) {
  return ConvexGeometry(std::move(system));
}
}  // namespace detail

namespace {

void require_zero_closed(const ClosureSystem& system, const char* where) {
  if (!system.zero_closed()) {
    throw std::invalid_argument(std::string(where) +
                                " requires a zero-closed system (the empty "
                                "set must be a member)");
  }
}

}  // namespace

AepVerdict check_aep(const ClosureSystem& system) {
  require_zero_closed(system, "check_aep");
  const int n = system.ground().size();
  for (int i = 0; i < system.size(); ++i) {
    const std::uint64_t a = system.family().mask(i);
    for (int x = 0; x < n; ++x) {
      const std::uint64_t xbit = std::uint64_t{1} << x;
      if ((a & xbit) != 0) continue;
      for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        const std::uint64_t ybit = std::uint64_t{1} << y;
        if ((a & ybit) != 0) continue;
        if ((system.closure_mask(a | ybit) & xbit) != 0 &&
            (system.closure_mask(a | xbit) & ybit) != 0) {
          return {false,
                  AepWitness{Subset(system.ground(), a), x, y}};
        }
      }
    }
  }
  return {true, {}};
}

AccessibilityVerdict check_accessibility(const ClosureSystem& system) {
  require_zero_closed(system, "check_accessibility");
  const std::uint64_t full = system.ground().full_mask();
  const int n = system.ground().size();
  for (int i = 0; i < system.size(); ++i) {
    const std::uint64_t a = system.family().mask(i);
    if (a == full) continue;
    bool extends = false;
    for (int x = 0; x < n && !extends; ++x) {
      const std::uint64_t xbit = std::uint64_t{1} << x;
      if ((a & xbit) != 0) continue;
      if (system.family().contains_mask(a | xbit)) extends = true;
    }
    if (!extends) {
      return {false, Subset(system.ground(), a)};
    }
  }
  return {true, {}};
}

CoverCardinalityVerdict check_cover_cardinality(const ClosureSystem& system) {
  require_zero_closed(system, "check_cover_cardinality");
  for (const auto& [lo, hi] : covers_of(system).pairs) {
    const std::uint64_t gap =
        system.family().mask(hi) & ~system.family().mask(lo);
    if (std::popcount(gap) != 1) {
      return {false, std::make_pair(system.family().member(lo),
                                    system.family().member(hi))};
    }
  }
  return {true, {}};
}

Recognition recognize(const ClosureSystem& system) {
  Recognition result;
  result.aep = check_aep(system);
  result.accessibility = check_accessibility(system);
  result.cover = check_cover_cardinality(system);

  const bool a = result.aep.ok;
  if (result.accessibility.ok != a || result.cover.ok != a) {
    throw InternalConsistencyError(
        "recognize: the three characterization checks disagree on " +
        to_string(system.family()));
  }
  result.ok = a;
  if (a) {
    result.geometry = detail::trusted_geometry(system);
  }
  return result;
}

ConvexGeometry require_geometry(const ClosureSystem& system) {
  Recognition r = recognize(system);
  if (!r.ok) {
    throw std::invalid_argument("system is not a convex geometry: " +
                                to_string(system.family()));
  }
  return *std::move(r.geometry);
}

std::vector<StandardnessEntry> check_standard(const ConvexGeometry& g) {
  const ClosureSystem& system = g.system();
  const int n = system.ground().size();
  std::vector<StandardnessEntry> entries;
  entries.reserve(n);
  for (int x = 0; x < n; ++x) {
    const std::uint64_t xbit = std::uint64_t{1} << x;
    const std::uint64_t closure = system.closure_mask(xbit);
    const std::uint64_t deleted = closure & ~xbit;
    if (!system.family().contains_mask(deleted)) {
      throw InternalConsistencyError(
          "check_standard: closure(" + system.ground().label(x) +
          ") minus the point is not closed in " + to_string(system.family()));
    }
    entries.push_back(StandardnessEntry{x, Subset(system.ground(), closure),
                                        Subset(system.ground(), deleted)});
  }
  return entries;
}

Verdict<Subset> check_spatial(const ClosureSystem& system) {
  const SetFamily join_irr = irreducibles(system).join_irreducible;
  for (int i = 0; i < system.size(); ++i) {
    const std::uint64_t c = system.family().mask(i);
    std::uint64_t join = 0;
    for (std::uint64_t j : join_irr.masks()) {
      if ((j & ~c) == 0) join |= j;
    }
    if (system.closure_mask(join) != c) {
      return {false, system.family().member(i)};
    }
  }
  return {true, {}};
}

Verdict<JirrWitness> check_jirr_singletons(const ConvexGeometry& g) {
  const ClosureSystem& system = g.system();
  const SetFamily join_irr = irreducibles(system).join_irreducible;
  const int n = system.ground().size();
  for (int x = 0; x < n; ++x) {
    const std::uint64_t closure =
        system.closure_mask(std::uint64_t{1} << x);
    if (!join_irr.contains_mask(closure)) {
      return {false, JirrWitness{x, Subset(system.ground(), closure)}};
    }
  }
  return {true, {}};
}

ConvexGeometry join_geometries(const std::vector<ConvexGeometry>& geometries) {
  if (geometries.empty()) {
    throw std::invalid_argument("join_geometries needs at least one geometry");
  }
  std::vector<ClosureSystem> systems;
  systems.reserve(geometries.size());
  for (const auto& g : geometries) systems.push_back(g.system());

  Recognition r = recognize(join_systems(systems));
  if (!r.ok) {
    throw InternalConsistencyError(
        "join_geometries: the join of convex geometries failed recognition");
  }
  return *std::move(r.geometry);
}

}  // namespace cgeo
