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

#include "cgeo/chains.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cgeo/errors.hpp"
#include "cgeo/lattice.hpp"

namespace cgeo {

Chain Chain::in_system(const ClosureSystem& system,
                       std::vector<std::uint64_t> sets) {
  if (!system.zero_closed()) {
    throw std::invalid_argument("chains require a zero-closed system");
  }
  if (sets.empty() || sets.front() != 0 ||
      sets.back() != system.ground().full_mask()) {
    throw std::invalid_argument(
        "chain must run from the empty set to the full set");
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!system.family().contains_mask(sets[i])) {
      throw std::invalid_argument("chain member is not closed in the system");
    }
    if (i > 0 && !((sets[i - 1] & ~sets[i]) == 0 && sets[i - 1] != sets[i])) {
      throw std::invalid_argument("chain must be strictly increasing");
    }
  }
  return Chain(system.ground(), std::move(sets));
}

std::vector<Chain> maximal_chains(const ClosureSystem& system,
                                  std::size_t limit) {
  if (!system.zero_closed()) {
    throw std::invalid_argument(
        "maximal_chains requires a zero-closed system");
  }
  if (system.ground().size() > kMaxChainEnumeration) {
    throw GuardError("maximal_chains refuses ground sets larger than " +
                     std::to_string(kMaxChainEnumeration) + " elements");
  }

  const CoverRelation rel = covers_of(system);
  const auto& masks = system.family().masks();
  const int bottom = system.family().index_of_mask(0);
  const int top =
      system.family().index_of_mask(system.ground().full_mask());

  std::vector<Chain> out;
  std::vector<int> path{bottom};
  // Depth-first walk over upper covers; cover lists are index sorted, so
  // chains come out in lexicographic canonical order.
  auto descend = [&](auto&& self, int node) -> void {
    if (node == top) {
      std::vector<std::uint64_t> sets;
      sets.reserve(path.size());
      for (int i : path) sets.push_back(masks[i]);
      if (out.size() == limit) {
        throw GuardError("maximal_chains: more than " +
                         std::to_string(limit) + " chains");
      }
      out.push_back(Chain::in_system(system, std::move(sets)));
      return;
    }
    for (int next : rel.upper[node]) {
      path.push_back(next);
      self(self, next);
      path.pop_back();
    }
  };
  descend(descend, bottom);
  return out;
}

ChainElementMap h_map(const Chain& chain, const ConvexGeometry& g) {
  require_same_ground(chain.ground(), g.ground(), "h_map");
  const ClosureSystem& system = g.system();
  const auto& sets = chain.masks();

  // Maximality of the chain: every step must be a covering pair, nothing
  // closed strictly between.
  for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
    for (std::uint64_t c : system.family().masks()) {
      if (c != sets[i] && c != sets[i + 1] && (sets[i] & ~c) == 0 &&
          (c & ~sets[i + 1]) == 0) {
        throw std::invalid_argument("h_map requires a maximal chain");
      }
    }
  }

  const int n = g.ground().size();
  std::vector<int> position(n, -1);
  std::vector<bool> hit(sets.size(), false);
  for (int x = 0; x < n; ++x) {
    const std::uint64_t xbit = std::uint64_t{1} << x;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if ((sets[i] & xbit) != 0) {
        position[x] = static_cast<int>(i);
        break;
      }
    }
    const int p = position[x];
    if (p <= 0 || hit[p] || sets[p] != (sets[p - 1] | xbit)) {
      throw InternalConsistencyError(
          "h_map: element images do not biject onto the chain steps");
    }
    hit[p] = true;
  }
  // All n elements landed on distinct positions 1..set_count-1; the map is
  // onto exactly when the chain has n covering steps.
  if (chain.length() != n) {
    throw InternalConsistencyError(
        "h_map: maximal chain of a geometry does not have one step per "
        "element");
  }
  return ChainElementMap(chain, std::move(position));
}

TotalOrder order_from_chain(const Chain& chain, const ConvexGeometry& g) {
  const ChainElementMap map = h_map(chain, g);
  const int n = g.ground().size();
  // position_of is a bijection onto 1..n, so ranking by position gives a
  // total order with no ties.
  std::vector<int> perm(n, -1);
  for (int x = 0; x < n; ++x) {
    perm[map.position_of(x) - 1] = x;
  }
  return TotalOrder(g.ground(), std::move(perm));
}

ConvexGeometry ideal_geometry(const TotalOrder& order) {
  const int n = order.size();
  std::vector<std::uint64_t> prefixes;
  prefixes.reserve(n + 1);
  for (int k = 0; k <= n; ++k) prefixes.push_back(order.prefix_mask(k));
  return detail::trusted_geometry(
      ClosureSystem::from_family(SetFamily(order.ground(), std::move(prefixes))));
}

bool is_compatible(const TotalOrder& order, const ClosureSystem& system) {
  require_same_ground(order.ground(), system.ground(), "is_compatible");
  for (int k = 0; k <= order.size(); ++k) {
    if (!system.family().contains_mask(order.prefix_mask(k))) return false;
  }
  return true;
}

std::vector<TotalOrder> compatible_orders(const ConvexGeometry& g) {
  const int n = g.ground().size();
  if (n > kMaxChainEnumeration) {
    throw GuardError("compatible_orders refuses ground sets larger than " +
                     std::to_string(kMaxChainEnumeration) + " elements");
  }
  const ClosureSystem& system = g.system();

  std::vector<TotalOrder> out;
  std::vector<int> perm;
  perm.reserve(n);
  // Grow prefixes one closed set at a time; trying elements in index order
  // yields the orders lexicographically. Accessibility guarantees every
  // branch reaches the full set, dead ends would just backtrack.
  auto extend = [&](auto&& self, std::uint64_t prefix) -> void {
    if (static_cast<int>(perm.size()) == n) {
      out.emplace_back(g.ground(), perm);
      return;
    }
    for (int x = 0; x < n; ++x) {
      const std::uint64_t xbit = std::uint64_t{1} << x;
      if ((prefix & xbit) != 0) continue;
      if (!system.family().contains_mask(prefix | xbit)) continue;
      perm.push_back(x);
      self(self, prefix | xbit);
      perm.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

Chain chain_of_order(const TotalOrder& order, const ConvexGeometry& g) {
  require_same_ground(order.ground(), g.ground(), "chain_of_order");
  if (!is_compatible(order, g.system())) {
    throw std::invalid_argument(
        "chain_of_order requires a compatible order");
  }
  std::vector<std::uint64_t> sets;
  sets.reserve(order.size() + 1);
  for (int k = 0; k <= order.size(); ++k) sets.push_back(order.prefix_mask(k));
  return Chain::in_system(g.system(), std::move(sets));
}

}  // namespace cgeo
