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

#ifndef CGEO_CHAINS_HPP_
#define CGEO_CHAINS_HPP_

#include <cstdint>
#include <vector>

#include "cgeo/closure_system.hpp"
#include "cgeo/geometry.hpp"
#include "cgeo/total_order.hpp"

namespace cgeo {

// Largest ground set for which maximal_chains and compatible_orders will
// enumerate exhaustively.
inline constexpr int kMaxChainEnumeration = 10;

/**
 * Chain of closed sets from the empty set to the full set, strictly
 * increasing, every member closed in the system it was built against.
 * length() counts the covering steps, one less than the number of sets.
 */
class Chain {
 public:
  // Validates the shape and that every set is closed in system; throws
  // std::invalid_argument otherwise (system must be zero-closed).
  static Chain in_system(const ClosureSystem& system,
                         std::vector<std::uint64_t> sets);

  const GroundSet& ground() const { return ground_; }
  int length() const { return static_cast<int>(sets_.size()) - 1; }
  int set_count() const { return static_cast<int>(sets_.size()); }
  Subset at(int i) const { return Subset(ground_, sets_.at(i)); }
  const std::vector<std::uint64_t>& masks() const { return sets_; }

  bool operator==(const Chain& other) const {
    return ground_ == other.ground_ && sets_ == other.sets_;
  }
  bool operator!=(const Chain& other) const { return !(*this == other); }

 private:
  Chain(GroundSet ground, std::vector<std::uint64_t> sets)
      : ground_(std::move(ground)), sets_(std::move(sets)) {}
  GroundSet ground_;
  std::vector<std::uint64_t> sets_;
};

// All maximal chains of the closed-set lattice, i.e. all cover paths from
// the empty set to the full set, in lexicographic order by canonical member
// order. Requires a zero-closed system. GuardError when the ground set has
// more than kMaxChainEnumeration elements or more than limit chains exist.
std::vector<Chain> maximal_chains(const ClosureSystem& system,
                                  std::size_t limit = 1000000);

/**
 * The map x -> smallest chain member containing x, for a maximal chain of a
 * convex geometry. Construction verifies that the map is a bijection onto
 * the chain members with a lower cover in the chain and that each image is
 * its chain predecessor plus the one new element; a failure would falsify a
 * proved statement and raises InternalConsistencyError.
 */
class ChainElementMap {
 public:
  const Chain& chain() const { return chain_; }
  // Chain position of the smallest member containing the element.
  int position_of(int element) const { return position_.at(element); }
  Subset image_of(int element) const {
    return chain_.at(position_.at(element));
  }

 private:
  friend ChainElementMap h_map(const Chain& chain, const ConvexGeometry& g);
  ChainElementMap(Chain chain, std::vector<int> position)
      : chain_(std::move(chain)), position_(std::move(position)) {}
  Chain chain_;
  std::vector<int> position_;
};

// chain must be maximal in g (every step a covering pair), else
// std::invalid_argument.
ChainElementMap h_map(const Chain& chain, const ConvexGeometry& g);

// Reads the total order off a maximal chain: x comes before y exactly when
// the smallest chain member containing x is a proper subset of the one
// containing y.
TotalOrder order_from_chain(const Chain& chain, const ConvexGeometry& g);

// The n+1 prefixes of the order, as a convex geometry. The prefix family
// is a chain of sets, hence intersection stable, hence a geometry.
ConvexGeometry ideal_geometry(const TotalOrder& order);

// True when every prefix of the order is closed in the system.
bool is_compatible(const TotalOrder& order, const ClosureSystem& system);

// All orders whose prefixes are all closed, in lexicographic order.
// GuardError when the ground set has more than kMaxChainEnumeration
// elements.
std::vector<TotalOrder> compatible_orders(const ConvexGeometry& g);

// The prefixes of a compatible order, as a chain of g (it is maximal).
Chain chain_of_order(const TotalOrder& order, const ConvexGeometry& g);

}  // namespace cgeo

#endif  // CGEO_CHAINS_HPP_
