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

#ifndef CGEO_GEOMETRY_HPP_
#define CGEO_GEOMETRY_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "cgeo/closure_system.hpp"

namespace cgeo {

class TotalOrder;

// Accept/reject outcome of a check, with the first counterexample found in
// canonical order when the check rejects.
template <class W>
struct Verdict {
  bool ok = false;
  std::optional<W> witness;
};

// A genuine anti-exchange violation: a is closed, x and y are distinct
// elements outside a, x lies in closure(a + y) and y lies in closure(a + x).
struct AepWitness {
  Subset a;
  int x;
  int y;
};

using AepVerdict = Verdict<AepWitness>;
// Witness: a proper closed set that no single element extends to a closed set.
using AccessibilityVerdict = Verdict<Subset>;
// Witness: a covering pair of closed sets that differ by more than one element.
using CoverCardinalityVerdict = Verdict<std::pair<Subset, Subset>>;

// Anti-exchange check. Requires a zero-closed system (std::invalid_argument
// otherwise); scans closed sets, then x, then y in canonical order.
AepVerdict check_aep(const ClosureSystem& system);

// Every proper closed set must extend by one element to a closed set.
AccessibilityVerdict check_accessibility(const ClosureSystem& system);

// Every covering pair of closed sets must differ by exactly one element.
CoverCardinalityVerdict check_cover_cardinality(const ClosureSystem& system);

class ConvexGeometry;

namespace detail {
// Wraps a system that is a geometry by construction (prefix families of a
// total order, recognized joins). Library internal.
ConvexGeometry trusted_geometry(ClosureSystem system);
}  // namespace detail

/**
 * Convex geometry: a zero-closed closure system that passes the
 * anti-exchange check (equivalently the accessibility check, equivalently
 * the cover-cardinality check; the three agree on every finite system and
 * recognize() verifies that agreement on each call).
 *
 * Values are only obtainable from recognize() and from constructions that
 * provably yield geometries, so holding a ConvexGeometry certifies the
 * property.
 */
class ConvexGeometry {
 public:
  const ClosureSystem& system() const { return system_; }
  const SetFamily& family() const { return system_.family(); }
  const GroundSet& ground() const { return system_.ground(); }

  bool operator==(const ConvexGeometry& other) const {
    return system_ == other.system_;
  }
  bool operator!=(const ConvexGeometry& other) const {
    return !(*this == other);
  }

 private:
  explicit ConvexGeometry(ClosureSystem system) : system_(std::move(system)) {}
  ClosureSystem system_;

  friend ConvexGeometry detail::trusted_geometry(ClosureSystem system);
};

struct Recognition {
  bool ok = false;
  AepVerdict aep;
  AccessibilityVerdict accessibility;
  CoverCardinalityVerdict cover;
  std::optional<ConvexGeometry> geometry;  // present exactly when ok
};

// Runs all three characterization checks and requires them to agree;
// disagreement raises InternalConsistencyError (it would falsify a proved
// equivalence). Requires a zero-closed system.
Recognition recognize(const ClosureSystem& system);

// Convenience: recognize and unwrap, std::invalid_argument on rejection.
ConvexGeometry require_geometry(const ClosureSystem& system);

// One row per element: the closure of the singleton and that closure with
// the element deleted. The deleted set is closed in every finite geometry;
// check_standard raises InternalConsistencyError if it ever were not.
struct StandardnessEntry {
  int x;
  Subset singleton_closure;
  Subset deleted;  // singleton_closure minus x, verified closed
};
std::vector<StandardnessEntry> check_standard(const ConvexGeometry& g);

// Every closed set must equal the closure of the union of the
// join-irreducible closed sets below it. Witness: the first closed set
// that fails. Holds in every finite closure system.
Verdict<Subset> check_spatial(const ClosureSystem& system);

// The closure of every singleton must be join-irreducible in the
// closed-set lattice. Witness: an element whose singleton closure is not.
struct JirrWitness {
  int x;
  Subset singleton_closure;
};
Verdict<JirrWitness> check_jirr_singletons(const ConvexGeometry& g);

// Join of geometries, recognized on the way out. The join of convex
// geometries is again one; if recognize were ever to fail here that is an
// InternalConsistencyError, not user error.
ConvexGeometry join_geometries(const std::vector<ConvexGeometry>& geometries);

}  // namespace cgeo

#endif  // CGEO_GEOMETRY_HPP_
