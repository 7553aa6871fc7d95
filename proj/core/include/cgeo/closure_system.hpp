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

#ifndef CGEO_CLOSURE_SYSTEM_HPP_
#define CGEO_CLOSURE_SYSTEM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgeo/set_family.hpp"

namespace cgeo {

// Largest ground set for which operations that walk all 2^n subsets
// (operator_axiom_report, operator_leq's pointwise route) will run.
inline constexpr int kMaxSubsetEnumeration = 20;

// Why a family fails to be a closure system. The witness fields identify
// the first violation in canonical order.
struct FamilyViolation {
  enum class Kind { MissingFull, MissingEmpty, NotIntersectionStable };
  Kind kind;
  // For NotIntersectionStable: the pair whose intersection is missing.
  std::optional<std::pair<Subset, Subset>> pair;
};

struct FamilyVerdict {
  bool ok = false;
  std::optional<FamilyViolation> violation;
};

// Checks that the family contains the full set and is stable under pairwise
// intersection; with require_zero it must also contain the empty set. The
// violation reported is the first one in canonical member order.
FamilyVerdict validate_closure_system(const SetFamily& family,
                                      bool require_zero);

/**
 * Closure system: a family of subsets of X that contains X itself and is
 * stable under intersection. The induced closure of a set A is the
 * intersection of all members containing A; members are exactly the closed
 * sets. zero_closed() reports whether the empty set is a member.
 *
 * Instances are only obtainable through from_family, which validates the
 * invariant, so a ClosureSystem value is always a genuine closure system.
 */
class ClosureSystem {
 public:
  // Throws std::invalid_argument when the family is not a closure system.
  static ClosureSystem from_family(SetFamily family);

  const SetFamily& family() const { return family_; }
  const GroundSet& ground() const { return family_.ground(); }
  int size() const { return family_.size(); }
  bool zero_closed() const { return zero_closed_; }

  // Intersection of all closed supersets of m. Always a member.
  std::uint64_t closure_mask(std::uint64_t m) const;
  Subset closure(const Subset& a) const;

  bool operator==(const ClosureSystem& other) const {
    return family_ == other.family_;
  }
  bool operator!=(const ClosureSystem& other) const {
    return !(*this == other);
  }

 private:
  explicit ClosureSystem(SetFamily family, bool zero_closed)
      : family_(std::move(family)), zero_closed_(zero_closed) {}

  SetFamily family_;
  bool zero_closed_;
};

// Largest common refinement: the members present in both systems. Always a
// closure system again (X survives, stability is inherited).
ClosureSystem meet_systems(const ClosureSystem& a, const ClosureSystem& b);

// Smallest closure system containing every input family. Computed by
// closing the union of the families under pairwise intersection. Throws
// std::invalid_argument on an empty input list, GroundMismatchError when
// the inputs disagree on the ground set.
ClosureSystem join_systems(const std::vector<ClosureSystem>& systems);

// True when the operator of a is pointwise below the operator of b, i.e.
// closure_a(Y) is contained in closure_b(Y) for every Y. Checked two ways
// that provably agree: the pointwise sweep over all subsets and the
// reversed family containment (b's members all closed in a). Disagreement
// raises InternalConsistencyError. GuardError above kMaxSubsetEnumeration.
bool operator_leq(const ClosureSystem& a, const ClosureSystem& b);

// Result of sweeping the induced operator over every subset of the ground
// set. For a valid ClosureSystem all three properties hold by construction;
// the report exists so that the derivation is executable, witnesses are
// populated only if a property were ever to fail.
struct AxiomReport {
  bool extensive = false;
  bool monotone = false;
  bool idempotent = false;
  std::optional<Subset> extensive_witness;  // a with a not inside closure(a)
  std::optional<std::pair<Subset, Subset>>
      monotone_witness;  // a inside b with closure(a) not inside closure(b)
  std::optional<Subset> idempotent_witness;  // a with closure not a fixpoint
  // The fourth classical operator axiom (continuity at directed unions)
  // needs no sweep: on a finite ground set every directed union is reached
  // at a finite stage, so it holds automatically. Recorded as a note.
  std::string finitary_note;

  bool all_pass() const { return extensive && monotone && idempotent; }
};

// GuardError when the ground set exceeds kMaxSubsetEnumeration elements.
AxiomReport operator_axiom_report(const ClosureSystem& system);

std::string to_string(const ClosureSystem& system);

}  // namespace cgeo

#endif  // CGEO_CLOSURE_SYSTEM_HPP_
