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

#ifndef CGEO_FORMAT_HPP_
#define CGEO_FORMAT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cgeo/chains.hpp"
#include "cgeo/closure_system.hpp"
#include "cgeo/decomp.hpp"
#include "cgeo/geometry.hpp"
#include "cgeo/total_order.hpp"

namespace cgeo {

// Output flavor. Both flavors carry the same documents; parsing auto
// detects the flavor, so objects round trip through either one.
enum class Format { Text, JsonLike };

// One parsed value: a bare symbol (label, number, true/false), a list, or
// a keyed object. line/col point into the source for error reporting and
// are zero on programmatically built values.
struct DocValue {
  enum class Kind { Symbol, List, Object };

  Kind kind = Kind::Symbol;
  std::string symbol;
  std::vector<DocValue> items;
  std::vector<std::pair<std::string, DocValue>> fields;
  int line = 0;
  int col = 0;

  static DocValue sym(std::string s);
  static DocValue list(std::vector<DocValue> items);
  static DocValue object(std::vector<std::pair<std::string, DocValue>> fields);
};

// A document is a flat sequence of key/value fields. Keys are unique.
struct Document {
  std::vector<std::pair<std::string, DocValue>> fields;

  const DocValue* find(std::string_view key) const;
};

// Parses either flavor (a leading '{' selects the JSON reading). Throws
// ParseError on anything outside the grammar, including duplicate keys.
Document parse_document(std::string_view text);

// Renders a document; parse_document(write_document(d, f)) == d for both
// flavors, and writing is deterministic byte for byte.
std::string write_document(const Document& doc, Format format);

// Typed readers. All reject unknown labels, repeated labels, repeated
// members and unexpected keys with ParseError.
SetFamily parse_family(std::string_view text);
TotalOrder parse_order(std::string_view text);
Subset parse_subset(std::string_view text);

struct OrdersDoc {
  GroundSet ground;
  std::vector<TotalOrder> orders;
  std::optional<bool> verified;
};
OrdersDoc parse_orders(std::string_view text);

struct ChainsDoc {
  GroundSet ground;
  std::vector<std::vector<std::uint64_t>> chains;
};
ChainsDoc parse_chains(std::string_view text);

// Typed writers.
Document family_document(const SetFamily& family);
Document system_document(const ClosureSystem& system);
Document subset_document(const Subset& subset);
Document order_document(const TotalOrder& order);
Document orders_document(const GroundSet& ground,
                         const std::vector<TotalOrder>& orders);
Document decomposition_document(const Decomposition& d);
Document chains_document(const GroundSet& ground,
                         const std::vector<Chain>& chains);

// Verdict documents: fields verdict, ok, optional witness/reason, and for
// recognition the three characterization flags.
Document family_verdict_document(const GroundSet& ground,
                                 const FamilyVerdict& verdict);
Document recognition_document(const Recognition& recognition);

std::string serialize(const ClosureSystem& system, Format format);
std::string serialize(const TotalOrder& order, Format format);
std::string serialize(const Subset& subset, Format format);
std::string serialize(const Decomposition& d, Format format);

}  // namespace cgeo

#endif  // CGEO_FORMAT_HPP_
