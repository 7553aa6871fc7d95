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

#include "cgeo/symbolic.hpp"

#include <algorithm>
#include <ostream>

#include "cgeo/rng.hpp"

namespace cgeo::symbolic {

namespace {

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool sorted_contains(const std::vector<std::uint64_t>& v, std::uint64_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

// a subseteq b for sorted vectors.
bool sorted_subset(const std::vector<std::uint64_t>& a,
                   const std::vector<std::uint64_t>& b) {
  std::size_t j = 0;
  for (std::uint64_t x : a) {
    while (j < b.size() && b[j] < x) ++j;
    if (j == b.size() || b[j] != x) return false;
  }
  return true;
}

// a and b disjoint, both sorted.
bool sorted_disjoint(const std::vector<std::uint64_t>& a,
                     const std::vector<std::uint64_t>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string to_string(const Element& e) {
  return e.is_x ? "x" : std::to_string(e.value);
}

SymbolicSet SymbolicSet::finite(std::vector<std::uint64_t> naturals,
                                bool has_x) {
  return SymbolicSet(Kind::Finite, sorted_unique(std::move(naturals)), has_x);
}

SymbolicSet SymbolicSet::cofinite(std::vector<std::uint64_t> missing_naturals,
                                  bool missing_x) {
  return SymbolicSet(Kind::Cofinite, sorted_unique(std::move(missing_naturals)),
                     missing_x);
}

bool SymbolicSet::contains(const Element& e) const {
  if (e.is_x) return contains_x();
  const bool listed = sorted_contains(listed_, e.value);
  return is_finite() ? listed : !listed;
}

bool SymbolicSet::contains_x() const {
  // Finite: flag says x is a member. Cofinite: flag says x is missing.
  return is_finite() ? flag_ : !flag_;
}

bool SymbolicSet::subset_of(const SymbolicSet& other) const {
  if (is_finite() && other.is_finite()) {
    if (flag_ && !other.flag_) return false;
    return sorted_subset(listed_, other.listed_);
  }
  if (is_finite() && other.is_cofinite()) {
    if (flag_ && other.flag_) return false;  // we hold x, other misses it
    return sorted_disjoint(listed_, other.listed_);
  }
  if (is_cofinite() && other.is_finite()) {
    return false;  // an infinite set never fits inside a finite one
  }
  // Both cofinite: complements reverse the inclusion.
  if (other.flag_ && !flag_) return false;
  return sorted_subset(other.listed_, listed_);
}

SymbolicSet SymbolicSet::with(const Element& e) const {
  if (e.is_x) {
    if (is_finite()) return SymbolicSet(Kind::Finite, listed_, true);
    return SymbolicSet(Kind::Cofinite, listed_, false);
  }
  if (is_finite()) {
    std::vector<std::uint64_t> members = listed_;
    members.push_back(e.value);
    return finite(std::move(members), flag_);
  }
  std::vector<std::uint64_t> missing;
  missing.reserve(listed_.size());
  for (std::uint64_t v : listed_) {
    if (v != e.value) missing.push_back(v);
  }
  return SymbolicSet(Kind::Cofinite, std::move(missing), flag_);
}

std::string to_string(const SymbolicSet& s) {
  if (s == SymbolicSet::full()) return "X";
  if (s == SymbolicSet::naturals()) return "N";
  std::string listed = "[";
  bool first = true;
  for (std::uint64_t v : s.listed()) {
    if (!first) listed += ", ";
    listed += std::to_string(v);
    first = false;
  }
  if (s.flag()) {
    if (!first) listed += ", ";
    listed += "x";
  }
  listed += "]";
  return s.is_finite() ? listed : "X-" + listed;
}

std::ostream& operator<<(std::ostream& os, const SymbolicSet& s) {
  return os << to_string(s);
}

SymbolicSet closure(const SymbolicSet& s) {
  if (s.is_cofinite() || s.contains_x()) return SymbolicSet::full();
  return s;
}

AepTrialReport check_aep(std::uint64_t trials, std::uint64_t seed) {
  Rng rng(seed);
  AepTrialReport report{trials, 0, seed};

  // Proper closed sets are exactly the finite sets without x; sample those
  // for A, and elements outside A for the pair.
  constexpr std::uint64_t kNaturalBound = 48;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::vector<std::uint64_t> support;
    const std::uint64_t size = rng.below(8);
    for (std::uint64_t i = 0; i < size; ++i) {
      support.push_back(rng.below(kNaturalBound));
    }
    const SymbolicSet a = SymbolicSet::finite(std::move(support), false);

    auto outside = [&]() {
      while (true) {
        const Element e = rng.below(8) == 0
                              ? Element::x()
                              : Element::nat(rng.below(kNaturalBound));
        if (!a.contains(e)) return e;
      }
    };
    const Element u = outside();
    Element v = outside();
    while (v == u) v = outside();

    if (closure(a.with(v)).contains(u) && closure(a.with(u)).contains(v)) {
      ++report.violations;
    }
  }
  return report;
}

StandardnessWitness standardness_witness() {
  const SymbolicSet point = SymbolicSet::finite({}, true);  // {x}
  const SymbolicSet singleton_closure = closure(point);     // X
  // X minus the point x is N.
  const SymbolicSet deleted = SymbolicSet::naturals();
  return StandardnessWitness{singleton_closure, deleted, closure(deleted)};
}

NonalgebraicWitness nonalgebraic_witness() {
  const SymbolicSet a = SymbolicSet::naturals();
  // Every finite subset of N is closed already (finite, no x), so the
  // union of closures of finite subsets of N is N itself.
  return NonalgebraicWitness{a, closure(a), a, Element::x()};
}

}  // namespace cgeo::symbolic
