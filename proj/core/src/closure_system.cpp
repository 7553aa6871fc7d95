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

#include "cgeo/closure_system.hpp"

#include <stdexcept>
#include <unordered_set>

#include "cgeo/errors.hpp"

namespace cgeo {

FamilyVerdict validate_closure_system(const SetFamily& family,
                                      bool require_zero) {
  const std::uint64_t full = family.ground().full_mask();
  if (!family.contains_mask(full)) {
    return {false, FamilyViolation{FamilyViolation::Kind::MissingFull, {}}};
  }
  const int m = family.size();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const std::uint64_t meet = family.mask(i) & family.mask(j);
      if (!family.contains_mask(meet)) {
        return {false,
                FamilyViolation{
                    FamilyViolation::Kind::NotIntersectionStable,
                    std::make_pair(family.member(i), family.member(j))}};
      }
    }
  }
  if (require_zero && !family.contains_mask(0)) {
    return {false, FamilyViolation{FamilyViolation::Kind::MissingEmpty, {}}};
  }
  return {true, {}};
}

ClosureSystem ClosureSystem::from_family(SetFamily family) {
  const FamilyVerdict verdict = validate_closure_system(family, false);
  if (!verdict.ok) {
    const char* what =
        verdict.violation->kind == FamilyViolation::Kind::MissingFull
            ? "family does not contain the full ground set"
            : "family is not stable under intersection";
    throw std::invalid_argument(what);
  }
  const bool zero = family.contains_mask(0);
  return ClosureSystem(std::move(family), zero);
}

std::uint64_t ClosureSystem::closure_mask(std::uint64_t m) const {
  std::uint64_t result = ground().full_mask();
  for (std::uint64_t member : family_.masks()) {
    if ((member & m) == m) result &= member;
  }
  return result;
}

Subset ClosureSystem::closure(const Subset& a) const {
  require_same_ground(ground(), a.ground(), "ClosureSystem::closure");
  return Subset(ground(), closure_mask(a.bits()));
}

ClosureSystem meet_systems(const ClosureSystem& a, const ClosureSystem& b) {
  require_same_ground(a.ground(), b.ground(), "meet_systems");
  std::vector<std::uint64_t> kept;
  for (std::uint64_t m : a.family().masks()) {
    if (b.family().contains_mask(m)) kept.push_back(m);
  }
  return ClosureSystem::from_family(SetFamily(a.ground(), std::move(kept)));
}

ClosureSystem join_systems(const std::vector<ClosureSystem>& systems) {
  if (systems.empty()) {
    throw std::invalid_argument("join_systems needs at least one system");
  }
  const GroundSet& ground = systems.front().ground();
  for (const auto& s : systems) {
    require_same_ground(ground, s.ground(), "join_systems");
  }

  // Close the union of the families under pairwise intersection. Every
  // intersection of one member per input shows up this way, and nothing
  // else can: the result is the smallest intersection-stable family
  // containing all inputs.
  std::vector<std::uint64_t> all;
  std::unordered_set<std::uint64_t> present;
  for (const auto& s : systems) {
    for (std::uint64_t m : s.family().masks()) {
      if (present.insert(m).second) all.push_back(m);
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const std::uint64_t meet = all[i] & all[j];
      if (present.insert(meet).second) all.push_back(meet);
    }
  }
  return ClosureSystem::from_family(SetFamily(ground, std::move(all)));
}

bool operator_leq(const ClosureSystem& a, const ClosureSystem& b) {
  require_same_ground(a.ground(), b.ground(), "operator_leq");
  const int n = a.ground().size();
  if (n > kMaxSubsetEnumeration) {
    throw GuardError("operator_leq sweeps all subsets, refusing n > " +
                     std::to_string(kMaxSubsetEnumeration));
  }

  // Route 1: pointwise comparison of the two operators.
  bool pointwise = true;
  const std::uint64_t full = a.ground().full_mask();
  for (std::uint64_t m = 0;; ++m) {
    const std::uint64_t ca = a.closure_mask(m);
    if ((ca & ~b.closure_mask(m)) != 0) {
      pointwise = false;
      break;
    }
    if (m == full) break;
  }

  // Route 2: the order reverses on families, so the operator of a sits
  // below the operator of b exactly when every b-closed set is a-closed.
  const bool containment = b.family().subfamily_of(a.family());

  if (pointwise != containment) {
    throw InternalConsistencyError(
        "operator_leq: pointwise route and family containment route "
        "disagree");
  }
  return pointwise;
}

AxiomReport operator_axiom_report(const ClosureSystem& system) {
  const int n = system.ground().size();
  if (n > kMaxSubsetEnumeration) {
    throw GuardError("operator_axiom_report sweeps all subsets, refusing n > " +
                     std::to_string(kMaxSubsetEnumeration));
  }
  const std::uint64_t full = system.ground().full_mask();
  const GroundSet& ground = system.ground();

  AxiomReport report;
  report.extensive = true;
  report.monotone = true;
  report.idempotent = true;
  report.finitary_note =
      "continuity at directed unions holds automatically: the ground set is "
      "finite, so every directed union is attained at a finite stage";

  for (std::uint64_t m = 0;; ++m) {
    const std::uint64_t cm = system.closure_mask(m);
    if (report.extensive && (m & ~cm) != 0) {
      report.extensive = false;
      report.extensive_witness = Subset(ground, m);
    }
    if (report.idempotent && system.closure_mask(cm) != cm) {
      report.idempotent = false;
      report.idempotent_witness = Subset(ground, m);
    }
    // One-element ascents suffice for monotonicity: any pair a inside b is
    // connected by a chain of single-element additions.
    if (report.monotone) {
      for (int x = 0; x < n; ++x) {
        const std::uint64_t bit = std::uint64_t{1} << x;
        if ((m & bit) != 0) continue;
        if ((cm & ~system.closure_mask(m | bit)) != 0) {
          report.monotone = false;
          report.monotone_witness =
              std::make_pair(Subset(ground, m), Subset(ground, m | bit));
          break;
        }
      }
    }
    if (m == full) break;
  }
  return report;
}

std::string to_string(const ClosureSystem& system) {
  return to_string(system.family());
}

}  // namespace cgeo
