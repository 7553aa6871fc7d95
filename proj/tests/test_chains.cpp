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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "cgeo/chains.hpp"
#include "cgeo/closure_system.hpp"
#include "cgeo/decomp.hpp"
#include "cgeo/enumerate.hpp"
#include "cgeo/errors.hpp"
#include "cgeo/geometry.hpp"
#include "cgeo/ground_set.hpp"
#include "cgeo/rng.hpp"
#include "cgeo/set_family.hpp"
#include "cgeo/total_order.hpp"

namespace cgeo {
namespace {

ClosureSystem system_of(const GroundSet& ground,
                        std::vector<std::uint64_t> masks) {
  return ClosureSystem::from_family(SetFamily(ground, std::move(masks)));
}

ConvexGeometry interval3() {
  GroundSet g = GroundSet::numbered(3);
  return require_geometry(
      system_of(g, {0b000, 0b001, 0b010, 0b100, 0b011, 0b110, 0b111}));
}

ConvexGeometry boolean3() {
  GroundSet g = GroundSet::numbered(3);
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 0; m <= 0b111u; ++m) masks.push_back(m);
  return require_geometry(system_of(g, std::move(masks)));
}

// Reference enumeration: filter all n! orders by the prefix-closedness
// test. The library's search must return exactly this list.
std::vector<TotalOrder> orders_by_filter(const ConvexGeometry& g) {
  const int n = g.ground().size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<TotalOrder> out;
  do {
    TotalOrder order(g.ground(), perm);
    if (is_compatible(order, g.system())) out.push_back(order);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

TEST_CASE("total orders validate their permutation") {
  GroundSet g = GroundSet::numbered(3);
  TotalOrder id = TotalOrder::identity(g);
  CHECK(id.element_at(0) == 0);
  CHECK(id.rank_of(2) == 2);
  CHECK(id.prefix_mask(0) == 0);
  CHECK(id.prefix_mask(2) == 0b011);
  CHECK(to_string(id) == "(1, 2, 3)");
  TotalOrder o = TotalOrder::of_labels(g, {"2", "3", "1"});
  CHECK(o.perm() == std::vector<int>{1, 2, 0});
  CHECK(o.prefix_mask(2) == 0b110);
  CHECK_THROWS_AS(TotalOrder(g, {0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(TotalOrder::of_labels(g, {"1", "2"}), std::invalid_argument);
}

TEST_CASE("maximal chains of the interval system are the four cover paths") {
  ConvexGeometry g = interval3();
  std::vector<Chain> chains = maximal_chains(g.system());
  REQUIRE(chains.size() == 4);
  const std::vector<std::vector<std::uint64_t>> expect = {
      {0b000, 0b001, 0b011, 0b111},
      {0b000, 0b010, 0b011, 0b111},
      {0b000, 0b010, 0b110, 0b111},
      {0b000, 0b100, 0b110, 0b111},
  };
  for (std::size_t i = 0; i < expect.size(); ++i) {
    CHECK(chains[i].masks() == expect[i]);
    CHECK(chains[i].length() == 3);
  }
}

TEST_CASE("boolean system on three points has six maximal chains") {
  std::vector<Chain> chains = maximal_chains(boolean3().system());
  CHECK(chains.size() == 6);
  for (const Chain& c : chains) CHECK(c.length() == 3);
}

TEST_CASE("chain length is bounded by the ground size in any system") {
  for (const ClosureSystem& s :
       enumerate_closure_systems(GroundSet::numbered(3), true)) {
    for (const Chain& c : maximal_chains(s)) {
      CHECK(c.length() <= 3);
      CHECK(c.at(0).is_empty());
      CHECK(c.at(c.length()).is_full());
    }
  }
}

TEST_CASE("geometries have chains of exactly ground length") {
  for (const ClosureSystem& s :
       enumerate_closure_systems(GroundSet::numbered(3), true)) {
    Recognition rec = recognize(s);
    if (!rec.ok) continue;
    for (const Chain& c : maximal_chains(s)) {
      CHECK(c.length() == 3);
    }
  }
}

TEST_CASE("element-to-step map pins down one chain") {
  ConvexGeometry g = interval3();
  // The chain empty -> {2} -> {1,2} -> {1,2,3}.
  std::vector<Chain> chains = maximal_chains(g.system());
  const Chain& chain = chains[1];
  REQUIRE(chain.masks() ==
          std::vector<std::uint64_t>{0b000, 0b010, 0b011, 0b111});
  ChainElementMap h = h_map(chain, g);
  CHECK(h.position_of(1) == 1);  // element 2 enters first
  CHECK(h.position_of(0) == 2);  // element 1 enters second
  CHECK(h.position_of(2) == 3);  // element 3 enters last
  CHECK(h.image_of(1).bits() == 0b010);
  CHECK(h.image_of(0).bits() == 0b011);
  CHECK(h.image_of(2).bits() == 0b111);
  TotalOrder order = order_from_chain(chain, g);
  CHECK(order == TotalOrder::of_labels(g.ground(), {"2", "1", "3"}));
}

TEST_CASE("h_map rejects non-maximal chains") {
  ConvexGeometry g = interval3();
  Chain short_chain =
      Chain::in_system(g.system(), {0b000, 0b011, 0b111});
  CHECK_THROWS_AS(h_map(short_chain, g), std::invalid_argument);
}

TEST_CASE("chain construction validates membership and monotonicity") {
  ConvexGeometry g = interval3();
  CHECK_THROWS_AS(Chain::in_system(g.system(), {0b000, 0b101, 0b111}),
                  std::invalid_argument);  // {1,3} is not closed
  CHECK_THROWS_AS(Chain::in_system(g.system(), {0b000, 0b011, 0b001, 0b111}),
                  std::invalid_argument);  // not increasing
  CHECK_THROWS_AS(Chain::in_system(g.system(), {0b001, 0b111}),
                  std::invalid_argument);  // does not start at empty
}

TEST_CASE("compatible orders of the interval system are pinned") {
  ConvexGeometry g = interval3();
  std::vector<TotalOrder> orders = compatible_orders(g);
  REQUIRE(orders.size() == 4);
  CHECK(orders[0] == TotalOrder::of_labels(g.ground(), {"1", "2", "3"}));
  CHECK(orders[1] == TotalOrder::of_labels(g.ground(), {"2", "1", "3"}));
  CHECK(orders[2] == TotalOrder::of_labels(g.ground(), {"2", "3", "1"}));
  CHECK(orders[3] == TotalOrder::of_labels(g.ground(), {"3", "2", "1"}));
}

TEST_CASE("interval systems of longer chains have 2^(n-1) compatible orders") {
  for (int n = 2; n <= 6; ++n) {
    GroundSet ground = GroundSet::numbered(n);
    std::vector<std::uint64_t> masks{0};
    for (int i = 0; i < n; ++i) {
      std::uint64_t m = 0;
      for (int j = i; j < n; ++j) {
        m |= std::uint64_t{1} << j;
        masks.push_back(m);
      }
    }
    ConvexGeometry g = require_geometry(system_of(ground, std::move(masks)));
    // A compatible order grows an interval one endpoint at a time: after
    // the first element each step chooses left or right, except the last
    // step, which is forced.
    CHECK(compatible_orders(g).size() == (std::uint64_t{1} << (n - 1)));
  }
}

TEST_CASE("search matches the permutation filter") {
  ConvexGeometry cases[] = {interval3(), boolean3(),
                            random_geometry(4, 2, 7), random_geometry(5, 3, 9)};
  for (const ConvexGeometry& g : cases) {
    CHECK(compatible_orders(g) == orders_by_filter(g));
  }
}

TEST_CASE("ideal geometry of an order is its chain of prefixes") {
  GroundSet g = GroundSet::numbered(3);
  TotalOrder order = TotalOrder::of_labels(g, {"2", "1", "3"});
  ConvexGeometry ideal = ideal_geometry(order);
  CHECK(ideal.family() == SetFamily(g, {0b000, 0b010, 0b011, 0b111}));
  CHECK(is_compatible(order, ideal.system()));
  // The closed sets form a single path, so the generating order is the
  // only compatible one: any other order has a non-prefix set early on.
  std::vector<TotalOrder> only = compatible_orders(ideal);
  REQUIRE(only.size() == 1);
  CHECK(only[0] == order);
  CHECK(maximal_chains(ideal.system()).size() == 1);
}

TEST_CASE("orders and maximal chains are two views of the same data") {
  ConvexGeometry cases[] = {interval3(), boolean3(), random_geometry(4, 3, 3),
                            random_geometry(5, 2, 21)};
  for (const ConvexGeometry& g : cases) {
    std::vector<Chain> chains = maximal_chains(g.system());
    std::vector<TotalOrder> orders = compatible_orders(g);
    REQUIRE(chains.size() == orders.size());

    // chain -> order -> prefix chain comes back to the same sets.
    std::vector<TotalOrder> from_chains;
    for (const Chain& c : chains) {
      TotalOrder order = order_from_chain(c, g);
      ConvexGeometry ideal = ideal_geometry(order);
      CHECK(ideal.family() == SetFamily(g.ground(), c.masks()));
      from_chains.push_back(order);
    }
    std::sort(from_chains.begin(), from_chains.end());
    CHECK(from_chains == orders);

    // order -> chain -> order is the identity.
    for (const TotalOrder& order : orders) {
      Chain chain = chain_of_order(order, g);
      CHECK(order_from_chain(chain, g) == order);
    }
  }
}

TEST_CASE("prefixes of a compatible order form a maximal chain") {
  // This holds in any zero-closed closure system, not only in geometries:
  // consecutive prefixes differ by one element, so nothing fits strictly
  // between them, and both ends are extreme.
  for (const ClosureSystem& s :
       enumerate_closure_systems(GroundSet::numbered(3), true)) {
    std::vector<Chain> chains = maximal_chains(s);
    std::vector<int> perm{0, 1, 2};
    do {
      TotalOrder order(s.ground(), perm);
      if (!is_compatible(order, s)) continue;
      std::vector<std::uint64_t> prefixes;
      for (int k = 0; k <= 3; ++k) prefixes.push_back(order.prefix_mask(k));
      Chain chain = Chain::in_system(s, prefixes);
      CHECK(std::find_if(chains.begin(), chains.end(), [&](const Chain& c) {
              return c.masks() == chain.masks();
            }) != chains.end());
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("incompatible orders are rejected by chain_of_order") {
  ConvexGeometry g = interval3();
  TotalOrder bad = TotalOrder::of_labels(g.ground(), {"1", "3", "2"});
  CHECK(!is_compatible(bad, g.system()));
  CHECK_THROWS_AS(chain_of_order(bad, g), std::invalid_argument);
}

TEST_CASE("enumeration guards refuse large ground sets") {
  GroundSet big = GroundSet::numbered(kMaxChainEnumeration + 1);
  ConvexGeometry ideal = ideal_geometry(TotalOrder::identity(big));
  CHECK_THROWS_AS(maximal_chains(ideal.system()), GuardError);
  CHECK_THROWS_AS(compatible_orders(ideal), GuardError);
}

TEST_CASE("chain output limit is enforced") {
  CHECK_THROWS_AS(maximal_chains(boolean3().system(), 5), GuardError);
  CHECK(maximal_chains(boolean3().system(), 6).size() == 6);
}

}  // namespace
}  // namespace cgeo
