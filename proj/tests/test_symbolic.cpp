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

#include <doctest.h>

#include "cgeo/symbolic.hpp"

namespace cgeo::symbolic {
namespace {

TEST_CASE("elements distinguish naturals from the extra point") {
  CHECK(Element::x() == Element::x());
  CHECK(Element::nat(3) == Element::nat(3));
  CHECK(!(Element::nat(3) == Element::nat(4)));
  CHECK(!(Element::nat(0) == Element::x()));
  CHECK(to_string(Element::x()) == "x");
  CHECK(to_string(Element::nat(7)) == "7");
}

TEST_CASE("set construction normalizes and prints canonically") {
  CHECK(to_string(SymbolicSet::empty_set()) == "[]");
  CHECK(to_string(SymbolicSet::full()) == "X");
  CHECK(to_string(SymbolicSet::naturals()) == "N");
  CHECK(to_string(SymbolicSet::finite({2, 1}, false)) == "[1, 2]");
  CHECK(to_string(SymbolicSet::finite({}, true)) == "[x]");
  CHECK(to_string(SymbolicSet::finite({5}, true)) == "[5, x]");
  CHECK(to_string(SymbolicSet::cofinite({0}, false)) == "X-[0]");
  CHECK(SymbolicSet::finite({1, 2, 2}, false) ==
        SymbolicSet::finite({2, 1}, false));
}

TEST_CASE("membership respects the finite or cofinite representation") {
  SymbolicSet f = SymbolicSet::finite({1, 4}, true);
  CHECK(f.contains(Element::nat(1)));
  CHECK(!f.contains(Element::nat(2)));
  CHECK(f.contains(Element::x()));
  CHECK(f.contains_x());

  // Everything except 3 and x.
  SymbolicSet c = SymbolicSet::cofinite({3}, true);
  CHECK(c.contains(Element::nat(2)));
  CHECK(!c.contains(Element::nat(3)));
  CHECK(!c.contains(Element::x()));
  CHECK(!c.contains_x());

  CHECK(SymbolicSet::naturals().contains(Element::nat(1000000)));
  CHECK(!SymbolicSet::naturals().contains(Element::x()));
  CHECK(SymbolicSet::full().contains(Element::x()));
}

TEST_CASE("subset relation covers all four representation pairs") {
  SymbolicSet small = SymbolicSet::finite({1, 2}, false);
  SymbolicSet large = SymbolicSet::finite({1, 2, 3}, true);
  CHECK(small.subset_of(large));
  CHECK(!large.subset_of(small));

  // finite inside cofinite: the listed members must dodge the holes.
  SymbolicSet holes = SymbolicSet::cofinite({2}, false);
  CHECK(!small.subset_of(holes));
  CHECK(SymbolicSet::finite({1, 3}, false).subset_of(holes));
  CHECK(SymbolicSet::finite({1}, true).subset_of(SymbolicSet::full()));
  CHECK(!SymbolicSet::finite({}, true).subset_of(SymbolicSet::naturals()));

  // cofinite sets are infinite, so they never fit inside a finite set.
  CHECK(!SymbolicSet::naturals().subset_of(SymbolicSet::finite({1, 2}, true)));

  // cofinite inside cofinite: the larger complement loses.
  CHECK(SymbolicSet::cofinite({1, 2}, true)
            .subset_of(SymbolicSet::cofinite({1}, false)));
  CHECK(!SymbolicSet::cofinite({1}, false)
             .subset_of(SymbolicSet::cofinite({1, 2}, true)));
  CHECK(SymbolicSet::naturals().subset_of(SymbolicSet::full()));
  CHECK(!SymbolicSet::full().subset_of(SymbolicSet::naturals()));
}

TEST_CASE("adding elements works on both representations") {
  SymbolicSet f = SymbolicSet::finite({1}, false).with(Element::x());
  CHECK(f == SymbolicSet::finite({1}, true));
  SymbolicSet c = SymbolicSet::cofinite({3, 4}, true).with(Element::nat(3));
  CHECK(c == SymbolicSet::cofinite({4}, true));
  CHECK(SymbolicSet::cofinite({}, true).with(Element::x()) ==
        SymbolicSet::full());
}

TEST_CASE("closure fixes finite x-free sets and blows up everything else") {
  CHECK(closure(SymbolicSet::empty_set()) == SymbolicSet::empty_set());
  CHECK(closure(SymbolicSet::finite({4, 9}, false)) ==
        SymbolicSet::finite({4, 9}, false));
  CHECK(closure(SymbolicSet::finite({}, true)) == SymbolicSet::full());
  CHECK(closure(SymbolicSet::finite({1}, true)) == SymbolicSet::full());
  CHECK(closure(SymbolicSet::naturals()) == SymbolicSet::full());
  CHECK(closure(SymbolicSet::cofinite({5}, true)) == SymbolicSet::full());
  CHECK(closure(SymbolicSet::full()) == SymbolicSet::full());
}

TEST_CASE("the operator is a closure operator on sampled sets") {
  // Extensive and idempotent by the two-case definition; monotone because
  // the exceptional cases only grow.
  const SymbolicSet samples[] = {
      SymbolicSet::empty_set(),
      SymbolicSet::finite({1}, false),
      SymbolicSet::finite({1, 2, 3}, false),
      SymbolicSet::finite({10}, true),
      SymbolicSet::naturals(),
      SymbolicSet::cofinite({1, 2}, false),
      SymbolicSet::full(),
  };
  for (const SymbolicSet& a : samples) {
    CHECK(a.subset_of(closure(a)));
    CHECK(closure(closure(a)) == closure(a));
    for (const SymbolicSet& b : samples) {
      if (a.subset_of(b)) {
        CHECK(closure(a).subset_of(closure(b)));
      }
    }
  }
}

TEST_CASE("deleting the extra point from its closure leaves a non-closed set") {
  StandardnessWitness w = standardness_witness();
  CHECK(w.singleton_closure == SymbolicSet::full());
  CHECK(w.deleted == SymbolicSet::naturals());
  CHECK(w.deleted_closure == SymbolicSet::full());
  // deleted is strictly inside its closure, so it is not closed.
  CHECK(!(w.deleted == w.deleted_closure));
}

TEST_CASE("the closure of the naturals outruns its finite stages") {
  NonalgebraicWitness w = nonalgebraic_witness();
  CHECK(w.a == SymbolicSet::naturals());
  CHECK(w.a_closure == SymbolicSet::full());
  CHECK(w.finite_closure_union == SymbolicSet::naturals());
  CHECK(w.gap == Element::x());
  CHECK(w.a_closure.contains(w.gap));
  CHECK(!w.finite_closure_union.contains(w.gap));
}

TEST_CASE("sampled anti-exchange trials never find a violation") {
  AepTrialReport r = check_aep(2000, 99);
  CHECK(r.trials == 2000);
  CHECK(r.violations == 0);
  CHECK(r.seed == 99);
  // Reproducible counts.
  AepTrialReport r2 = check_aep(2000, 99);
  CHECK(r2.violations == r.violations);
}

}  // namespace
}  // namespace cgeo::symbolic
