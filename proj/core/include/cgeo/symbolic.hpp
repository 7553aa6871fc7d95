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

#ifndef CGEO_SYMBOLIC_HPP_
#define CGEO_SYMBOLIC_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cgeo::symbolic {

// One countable ground set, fixed for the whole module: the naturals
// together with one extra point x. The closure of a set is the whole
// ground set when the set is co-finite or contains x, and the set itself
// otherwise. This single operator exhibits behaviour no finite system can:
// a singleton closure whose deletion is not closed, and a closed set that
// is not the union of closures of its finite subsets.

// An element: either the special point x or a natural number.
struct Element {
  bool is_x = false;
  std::uint64_t value = 0;

  static Element x() { return Element{true, 0}; }
  static Element nat(std::uint64_t v) { return Element{false, v}; }

  bool operator==(const Element& other) const {
    return is_x == other.is_x && (is_x || value == other.value);
  }
  bool operator!=(const Element& other) const { return !(*this == other); }
};

std::string to_string(const Element& e);

/**
 * Finitely describable subset of the ground set: either a finite set
 * (its members listed) or a co-finite set (its complement listed). The
 * representation is canonical, a set is stored as Finite exactly when it
 * is finite, so equal sets compare equal structurally.
 */
class SymbolicSet {
 public:
  enum class Kind { Finite, Cofinite };

  // members/missing naturals are deduplicated and sorted.
  static SymbolicSet finite(std::vector<std::uint64_t> naturals, bool has_x);
  static SymbolicSet cofinite(std::vector<std::uint64_t> missing_naturals,
                              bool missing_x);

  static SymbolicSet empty_set() { return finite({}, false); }
  static SymbolicSet full() { return cofinite({}, false); }
  // The naturals: everything except x.
  static SymbolicSet naturals() { return cofinite({}, true); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_cofinite() const { return kind_ == Kind::Cofinite; }

  // Finite: the members. Cofinite: the complement's naturals.
  const std::vector<std::uint64_t>& listed() const { return listed_; }
  // Finite: whether x is a member. Cofinite: whether x is missing.
  bool flag() const { return flag_; }

  bool contains(const Element& e) const;
  bool contains_x() const;
  bool subset_of(const SymbolicSet& other) const;
  SymbolicSet with(const Element& e) const;

  bool operator==(const SymbolicSet& other) const {
    return kind_ == other.kind_ && flag_ == other.flag_ &&
           listed_ == other.listed_;
  }
  bool operator!=(const SymbolicSet& other) const { return !(*this == other); }

 private:
  SymbolicSet(Kind kind, std::vector<std::uint64_t> listed, bool flag)
      : kind_(kind), listed_(std::move(listed)), flag_(flag) {}
  Kind kind_;
  std::vector<std::uint64_t> listed_;
  bool flag_;
};

// "X" for the full set, "N" for the naturals, otherwise the member list
// [..] for finite sets and X-[..] for co-finite ones.
std::string to_string(const SymbolicSet& s);
std::ostream& operator<<(std::ostream& os, const SymbolicSet& s);

// The whole ground set when s is co-finite or contains x, s itself
// otherwise.
SymbolicSet closure(const SymbolicSet& s);

// Randomized anti-exchange trial run: sample a closed set A and two
// distinct elements outside it, and test that u in closure(A + v) and
// v in closure(A + u) never both hold. violations stays 0; the operator
// satisfies anti-exchange even though the ground set is infinite.
struct AepTrialReport {
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  std::uint64_t seed = 0;
};
AepTrialReport check_aep(std::uint64_t trials, std::uint64_t seed);

// closure({x}) = X, yet X minus x (the naturals) is not closed. No
// geometry on a finite ground set can do this: deleting a point from a
// singleton closure always lands on a closed set there.
struct StandardnessWitness {
  SymbolicSet singleton_closure;  // closure({x}) = X
  SymbolicSet deleted;            // X minus x = N
  SymbolicSet deleted_closure;    // closure(N) = X, so N is not closed
};
StandardnessWitness standardness_witness();

// The closure of N is X, but every finite subset of N is already closed,
// so the union of finite-subset closures is N itself: the operator is not
// determined by its finite restrictions, x is the gap.
struct NonalgebraicWitness {
  SymbolicSet a;                     // N
  SymbolicSet a_closure;             // X
  SymbolicSet finite_closure_union;  // N
  Element gap;                       // x
};
NonalgebraicWitness nonalgebraic_witness();

}  // namespace cgeo::symbolic

#endif  // CGEO_SYMBOLIC_HPP_
