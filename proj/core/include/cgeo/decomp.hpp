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

#ifndef CGEO_DECOMP_HPP_
#define CGEO_DECOMP_HPP_

#include <cstdint>
#include <vector>

#include "cgeo/chains.hpp"
#include "cgeo/geometry.hpp"
#include "cgeo/total_order.hpp"

namespace cgeo {

// Exact minimal-cover search refuses geometries with more compatible
// orders than this (the subset search space is exponential in it).
inline constexpr int kMaxExactCoverOrders = 32;

/**
 * Representation of a geometry as the join of the prefix (ideal)
 * geometries of compatible orders. verified is set after reconstruct has
 * been compared against the source family; every constructor in this
 * module performs that comparison before returning.
 */
struct Decomposition {
  ConvexGeometry source;
  std::vector<TotalOrder> orders;
  bool verified = false;
};

enum class DecomposeMode {
  All,            // every compatible order
  WitnessPerSet,  // one maximal chain threaded through each closed set
};

// Decomposes g into compatible orders whose ideal geometries join back to
// exactly g. The reconstruction identity is checked before returning; a
// mismatch would falsify a proved statement and raises
// InternalConsistencyError. Ground sets above kMaxChainEnumeration are
// refused in All mode (it enumerates orders).
Decomposition ej_decompose(const ConvexGeometry& g, DecomposeMode mode);

// Join of the ideal geometries of the decomposition's orders.
ConvexGeometry reconstruct(const Decomposition& d);

enum class CoverMode {
  Exact,   // smallest subset of compatible orders, first in canonical order
  Greedy,  // set-cover heuristic on meet-irreducible closed sets
};

// Smallest (Exact) or heuristically small (Greedy) list of compatible
// orders that reconstructs g. Exact mode searches subsets by ascending
// cardinality and refuses more than kMaxExactCoverOrders compatible orders.
Decomposition min_order_cover(const ConvexGeometry& g, CoverMode mode);

// Join of k ideal geometries of seeded random orders on n elements, with
// ground set labelled "1".."n". Always a convex geometry.
ConvexGeometry random_geometry(int n, int k, std::uint64_t seed);

}  // namespace cgeo

#endif  // CGEO_DECOMP_HPP_
