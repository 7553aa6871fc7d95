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

#include "cgeo/format.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "cgeo/errors.hpp"

namespace cgeo {

namespace {

bool is_symbol_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         c == '+' || c == '-';
}

// ---------------------------------------------------------------------------
// Text flavor tokenizer.

struct Token {
  enum class Kind {
    Symbol,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Colon,
    End
  };
  Kind kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') step();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        step();
      } else {
        break;
      }
    }
    const int line = line_;
    const int col = col_;
    if (pos_ >= text_.size()) {
      current_ = {Token::Kind::End, "", line, col};
      return;
    }
    const char c = text_[pos_];
    switch (c) {
      case '[': step(); current_ = {Token::Kind::LBracket, "[", line, col}; return;
      case ']': step(); current_ = {Token::Kind::RBracket, "]", line, col}; return;
      case '{': step(); current_ = {Token::Kind::LBrace, "{", line, col}; return;
      case '}': step(); current_ = {Token::Kind::RBrace, "}", line, col}; return;
      case ',': step(); current_ = {Token::Kind::Comma, ",", line, col}; return;
      case ':': step(); current_ = {Token::Kind::Colon, ":", line, col}; return;
      default: break;
    }
    if (c == '"') {
      step();
      std::string out;
      while (true) {
        if (pos_ >= text_.size()) {
          throw ParseError("unterminated string", line, col);
        }
        const char d = text_[pos_];
        step();
        if (d == '"') break;
        if (d == '\\') {
          if (pos_ >= text_.size()) {
            throw ParseError("unterminated escape", line_, col_);
          }
          const char e = text_[pos_];
          step();
          if (e != '"' && e != '\\') {
            throw ParseError("unknown escape in string", line, col);
          }
          out.push_back(e);
        } else {
          out.push_back(d);
        }
      }
      current_ = {Token::Kind::Symbol, std::move(out), line, col};
      return;
    }
    if (is_symbol_char(c)) {
      std::string out;
      while (pos_ < text_.size() && is_symbol_char(text_[pos_])) {
        out.push_back(text_[pos_]);
        step();
      }
      current_ = {Token::Kind::Symbol, std::move(out), line, col};
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line,
                     col);
  }

  void step() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_{Token::Kind::End, "", 1, 1};
};

DocValue parse_value(Lexer& lexer);

std::vector<std::pair<std::string, DocValue>> parse_fields(
    Lexer& lexer, Token::Kind terminator) {
  std::vector<std::pair<std::string, DocValue>> fields;
  std::set<std::string> seen;
  while (lexer.peek().kind != terminator) {
    const Token key = lexer.next();
    if (key.kind != Token::Kind::Symbol) {
      throw ParseError("expected a key", key.line, key.col);
    }
    if (!seen.insert(key.text).second) {
      throw ParseError("duplicate key '" + key.text + "'", key.line, key.col);
    }
    const Token colon = lexer.next();
    if (colon.kind != Token::Kind::Colon) {
      throw ParseError("expected ':' after key '" + key.text + "'",
                       colon.line, colon.col);
    }
    fields.emplace_back(key.text, parse_value(lexer));
    if (terminator == Token::Kind::RBrace) {
      if (lexer.peek().kind == Token::Kind::Comma) {
        lexer.next();
      } else if (lexer.peek().kind != Token::Kind::RBrace) {
        const Token& t = lexer.peek();
        throw ParseError("expected ',' or '}'", t.line, t.col);
      }
    }
  }
  return fields;
}

DocValue parse_value(Lexer& lexer) {
  const Token t = lexer.next();
  DocValue v;
  v.line = t.line;
  v.col = t.col;
  switch (t.kind) {
    case Token::Kind::Symbol:
      v.kind = DocValue::Kind::Symbol;
      v.symbol = t.text;
      return v;
    case Token::Kind::LBracket: {
      v.kind = DocValue::Kind::List;
      if (lexer.peek().kind == Token::Kind::RBracket) {
        lexer.next();
        return v;
      }
      while (true) {
        v.items.push_back(parse_value(lexer));
        const Token sep = lexer.next();
        if (sep.kind == Token::Kind::RBracket) return v;
        if (sep.kind != Token::Kind::Comma) {
          throw ParseError("expected ',' or ']'", sep.line, sep.col);
        }
      }
    }
    case Token::Kind::LBrace: {
      v.kind = DocValue::Kind::Object;
      v.fields = parse_fields(lexer, Token::Kind::RBrace);
      lexer.next();  // consume '}'
      return v;
    }
    default:
      throw ParseError("expected a value", t.line, t.col);
  }
}

// ---------------------------------------------------------------------------
// JSON flavor via nlohmann. Symbols map to strings, with true/false and
// integers accepted on the way in and true/false emitted as booleans on
// the way out.

using OrderedJson = nlohmann::ordered_json;

DocValue from_json(const OrderedJson& j) {
  DocValue v;
  if (j.is_string()) {
    v.kind = DocValue::Kind::Symbol;
    v.symbol = j.get<std::string>();
  } else if (j.is_boolean()) {
    v.kind = DocValue::Kind::Symbol;
    v.symbol = j.get<bool>() ? "true" : "false";
  } else if (j.is_number_integer()) {
    v.kind = DocValue::Kind::Symbol;
    v.symbol = std::to_string(j.get<long long>());
  } else if (j.is_number_unsigned()) {
    v.kind = DocValue::Kind::Symbol;
    v.symbol = std::to_string(j.get<unsigned long long>());
  } else if (j.is_array()) {
    v.kind = DocValue::Kind::List;
    for (const auto& item : j) v.items.push_back(from_json(item));
  } else if (j.is_object()) {
    v.kind = DocValue::Kind::Object;
    for (const auto& [key, value] : j.items()) {
      v.fields.emplace_back(key, from_json(value));
    }
  } else {
    throw ParseError("unsupported JSON value", 0, 0);
  }
  return v;
}

OrderedJson to_json(const DocValue& v) {
  switch (v.kind) {
    case DocValue::Kind::Symbol:
      if (v.symbol == "true") return OrderedJson(true);
      if (v.symbol == "false") return OrderedJson(false);
      return OrderedJson(v.symbol);
    case DocValue::Kind::List: {
      OrderedJson out = OrderedJson::array();
      for (const auto& item : v.items) out.push_back(to_json(item));
      return out;
    }
    case DocValue::Kind::Object: {
      OrderedJson out = OrderedJson::object();
      for (const auto& [key, value] : v.fields) out[key] = to_json(value);
      return out;
    }
  }
  return OrderedJson();
}

// ---------------------------------------------------------------------------
// Text flavor writer.

bool needs_quoting(const std::string& s) {
  if (s.empty()) return true;
  return !std::all_of(s.begin(), s.end(), is_symbol_char);
}

void write_symbol(std::string& out, const std::string& s) {
  if (!needs_quoting(s)) {
    out += s;
    return;
  }
  out += '"';
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
}

void write_value(std::string& out, const DocValue& v) {
  switch (v.kind) {
    case DocValue::Kind::Symbol:
      write_symbol(out, v.symbol);
      return;
    case DocValue::Kind::List:
      out += '[';
      for (std::size_t i = 0; i < v.items.size(); ++i) {
        if (i > 0) out += ", ";
        write_value(out, v.items[i]);
      }
      out += ']';
      return;
    case DocValue::Kind::Object:
      out += '{';
      for (std::size_t i = 0; i < v.fields.size(); ++i) {
        if (i > 0) out += ", ";
        write_symbol(out, v.fields[i].first);
        out += ": ";
        write_value(out, v.fields[i].second);
      }
      out += '}';
      return;
  }
}

// ---------------------------------------------------------------------------
// Field plumbing shared by the typed readers.

const DocValue& require_field(const Document& doc, std::string_view key) {
  const DocValue* v = doc.find(key);
  if (v == nullptr) {
    throw ParseError("missing required key '" + std::string(key) + "'", 1, 1);
  }
  return *v;
}

void require_keys(const Document& doc, const std::vector<std::string>& keys,
                  const std::vector<std::string>& optional = {}) {
  for (const auto& [key, value] : doc.fields) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end() &&
        std::find(optional.begin(), optional.end(), key) == optional.end()) {
      throw ParseError("unexpected key '" + key + "'", value.line, value.col);
    }
  }
  for (const auto& key : keys) require_field(doc, key);
}

const std::string& as_symbol(const DocValue& v, const char* what) {
  if (v.kind != DocValue::Kind::Symbol) {
    throw ParseError(std::string("expected ") + what, v.line, v.col);
  }
  return v.symbol;
}

const std::vector<DocValue>& as_list(const DocValue& v, const char* what) {
  if (v.kind != DocValue::Kind::List) {
    throw ParseError(std::string("expected ") + what, v.line, v.col);
  }
  return v.items;
}

std::vector<std::string> label_list(const DocValue& v, const char* what) {
  std::vector<std::string> out;
  for (const auto& item : as_list(v, what)) {
    out.push_back(as_symbol(item, "a label"));
  }
  return out;
}

GroundSet ground_of(const Document& doc) {
  const DocValue& v = require_field(doc, "ground");
  try {
    return GroundSet(label_list(v, "a list of labels"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), v.line, v.col);
  }
}

Subset subset_of_value(const GroundSet& ground, const DocValue& v) {
  try {
    return Subset::of_labels(ground, label_list(v, "a set of labels"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), v.line, v.col);
  }
}

TotalOrder order_of_value(const GroundSet& ground, const DocValue& v) {
  try {
    return TotalOrder::of_labels(ground, label_list(v, "an element list"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), v.line, v.col);
  }
}

DocValue labels_value(const std::vector<std::string>& labels) {
  std::vector<DocValue> items;
  items.reserve(labels.size());
  for (const auto& label : labels) items.push_back(DocValue::sym(label));
  return DocValue::list(std::move(items));
}

DocValue bool_value(bool b) { return DocValue::sym(b ? "true" : "false"); }

}  // namespace

DocValue DocValue::sym(std::string s) {
  DocValue v;
  v.kind = Kind::Symbol;
  v.symbol = std::move(s);
  return v;
}

DocValue DocValue::list(std::vector<DocValue> items) {
  DocValue v;
  v.kind = Kind::List;
  v.items = std::move(items);
  return v;
}

DocValue DocValue::object(std::vector<std::pair<std::string, DocValue>> fields) {
  DocValue v;
  v.kind = Kind::Object;
  v.fields = std::move(fields);
  return v;
}

const DocValue* Document::find(std::string_view key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return &v;
  }
  return nullptr;
}

Document parse_document(std::string_view text) {
  // A leading '{' (ignoring whitespace and comments) selects the JSON
  // reading; documents in the text flavor start with a bare key.
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++pos;
    } else if (c == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
    } else {
      break;
    }
  }
  if (pos < text.size() && text[pos] == '{') {
    OrderedJson j;
    // The DOM collapses repeated keys silently, so duplicates have to be
    // caught at parse events while both occurrences are still visible.
    std::vector<std::set<std::string>> object_keys;
    OrderedJson::parser_callback_t duplicate_guard =
        [&object_keys](int, OrderedJson::parse_event_t event,
                       OrderedJson& parsed) {
          if (event == OrderedJson::parse_event_t::object_start) {
            object_keys.emplace_back();
          } else if (event == OrderedJson::parse_event_t::object_end) {
            object_keys.pop_back();
          } else if (event == OrderedJson::parse_event_t::key) {
            const std::string key = parsed.get<std::string>();
            if (!object_keys.back().insert(key).second) {
              throw ParseError("duplicate key '" + key + "'", 0, 0);
            }
          }
          return true;
        };
    try {
      j = OrderedJson::parse(text, duplicate_guard);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(e.what(), 0, 0);
    }
    if (!j.is_object()) {
      throw ParseError("top level JSON value must be an object", 0, 0);
    }
    DocValue root = from_json(j);
    Document doc;
    std::set<std::string> seen;
    for (auto& [key, value] : root.fields) {
      if (!seen.insert(key).second) {
        throw ParseError("duplicate key '" + key + "'", 0, 0);
      }
      doc.fields.emplace_back(key, std::move(value));
    }
    return doc;
  }

  Lexer lexer(text);
  Document doc;
  doc.fields = parse_fields(lexer, Token::Kind::End);
  if (doc.fields.empty()) {
    throw ParseError("empty document", 1, 1);
  }
  return doc;
}

std::string write_document(const Document& doc, Format format) {
  if (format == Format::Text) {
    std::string out;
    for (const auto& [key, value] : doc.fields) {
      write_symbol(out, key);
      out += ": ";
      write_value(out, value);
      out += '\n';
    }
    return out;
  }
  OrderedJson j = OrderedJson::object();
  for (const auto& [key, value] : doc.fields) j[key] = to_json(value);
  return j.dump(2) + "\n";
}

SetFamily parse_family(std::string_view text) {
  const Document doc = parse_document(text);
  require_keys(doc, {"ground", "closed"});
  const GroundSet ground = ground_of(doc);
  const DocValue& closed = require_field(doc, "closed");
  std::vector<std::uint64_t> masks;
  std::set<std::uint64_t> seen;
  for (const auto& item : as_list(closed, "a list of sets")) {
    const Subset member = subset_of_value(ground, item);
    if (!seen.insert(member.bits()).second) {
      throw ParseError("duplicate member " + to_string(member), item.line,
                       item.col);
    }
    masks.push_back(member.bits());
  }
  return SetFamily(ground, std::move(masks));
}

TotalOrder parse_order(std::string_view text) {
  const Document doc = parse_document(text);
  require_keys(doc, {"ground", "order"});
  const GroundSet ground = ground_of(doc);
  return order_of_value(ground, require_field(doc, "order"));
}

Subset parse_subset(std::string_view text) {
  const Document doc = parse_document(text);
  require_keys(doc, {"ground", "set"});
  const GroundSet ground = ground_of(doc);
  return subset_of_value(ground, require_field(doc, "set"));
}

OrdersDoc parse_orders(std::string_view text) {
  const Document doc = parse_document(text);
  require_keys(doc, {"ground", "orders"}, {"verified"});
  GroundSet ground = ground_of(doc);
  std::vector<TotalOrder> orders;
  for (const auto& item :
       as_list(require_field(doc, "orders"), "a list of orders")) {
    orders.push_back(order_of_value(ground, item));
  }
  std::optional<bool> verified;
  if (const DocValue* v = doc.find("verified")) {
    const std::string& s = as_symbol(*v, "true or false");
    if (s != "true" && s != "false") {
      throw ParseError("expected true or false", v->line, v->col);
    }
    verified = (s == "true");
  }
  return OrdersDoc{std::move(ground), std::move(orders), verified};
}

ChainsDoc parse_chains(std::string_view text) {
  const Document doc = parse_document(text);
  require_keys(doc, {"ground", "chains"});
  GroundSet ground = ground_of(doc);
  std::vector<std::vector<std::uint64_t>> chains;
  for (const auto& chain :
       as_list(require_field(doc, "chains"), "a list of chains")) {
    std::vector<std::uint64_t> sets;
    for (const auto& member : as_list(chain, "a list of sets")) {
      sets.push_back(subset_of_value(ground, member).bits());
    }
    chains.push_back(std::move(sets));
  }
  return ChainsDoc{std::move(ground), std::move(chains)};
}

Document family_document(const SetFamily& family) {
  std::vector<DocValue> members;
  members.reserve(family.size());
  for (int i = 0; i < family.size(); ++i) {
    members.push_back(labels_value(family.member(i).member_labels()));
  }
  Document doc;
  doc.fields.emplace_back("ground", labels_value(family.ground().labels()));
  doc.fields.emplace_back("closed", DocValue::list(std::move(members)));
  return doc;
}

Document system_document(const ClosureSystem& system) {
  return family_document(system.family());
}

Document subset_document(const Subset& subset) {
  Document doc;
  doc.fields.emplace_back("ground", labels_value(subset.ground().labels()));
  doc.fields.emplace_back("set", labels_value(subset.member_labels()));
  return doc;
}

Document order_document(const TotalOrder& order) {
  Document doc;
  doc.fields.emplace_back("ground", labels_value(order.ground().labels()));
  doc.fields.emplace_back("order", labels_value(order.element_labels()));
  return doc;
}

Document orders_document(const GroundSet& ground,
                         const std::vector<TotalOrder>& orders) {
  std::vector<DocValue> items;
  items.reserve(orders.size());
  for (const auto& o : orders) items.push_back(labels_value(o.element_labels()));
  Document doc;
  doc.fields.emplace_back("ground", labels_value(ground.labels()));
  doc.fields.emplace_back("orders", DocValue::list(std::move(items)));
  return doc;
}

Document decomposition_document(const Decomposition& d) {
  Document doc = orders_document(d.source.ground(), d.orders);
  doc.fields.emplace_back("verified", bool_value(d.verified));
  return doc;
}

Document chains_document(const GroundSet& ground,
                         const std::vector<Chain>& chains) {
  std::vector<DocValue> items;
  items.reserve(chains.size());
  for (const auto& chain : chains) {
    std::vector<DocValue> sets;
    sets.reserve(chain.set_count());
    for (int i = 0; i < chain.set_count(); ++i) {
      sets.push_back(labels_value(chain.at(i).member_labels()));
    }
    items.push_back(DocValue::list(std::move(sets)));
  }
  Document doc;
  doc.fields.emplace_back("ground", labels_value(ground.labels()));
  doc.fields.emplace_back("chains", DocValue::list(std::move(items)));
  return doc;
}

Document family_verdict_document(const GroundSet& ground,
                                 const FamilyVerdict& verdict) {
  Document doc;
  doc.fields.emplace_back(
      "verdict",
      DocValue::sym(verdict.ok ? "closure-system" : "not-a-closure-system"));
  doc.fields.emplace_back("ok", bool_value(verdict.ok));
  if (!verdict.ok) {
    const FamilyViolation& v = *verdict.violation;
    const char* reason = nullptr;
    switch (v.kind) {
      case FamilyViolation::Kind::MissingFull:
        reason = "missing-full-set";
        break;
      case FamilyViolation::Kind::MissingEmpty:
        reason = "missing-empty-set";
        break;
      case FamilyViolation::Kind::NotIntersectionStable:
        reason = "not-intersection-stable";
        break;
    }
    doc.fields.emplace_back("reason", DocValue::sym(reason));
    if (v.pair) {
      doc.fields.emplace_back(
          "witness",
          DocValue::object(
              {{"a", labels_value(v.pair->first.member_labels())},
               {"b", labels_value(v.pair->second.member_labels())}}));
    }
  }
  (void)ground;
  return doc;
}

Document recognition_document(const Recognition& recognition) {
  Document doc;
  doc.fields.emplace_back(
      "verdict", DocValue::sym(recognition.ok ? "convex-geometry"
                                              : "not-a-convex-geometry"));
  doc.fields.emplace_back("ok", bool_value(recognition.ok));
  if (!recognition.ok && recognition.aep.witness) {
    const AepWitness& w = *recognition.aep.witness;
    doc.fields.emplace_back(
        "witness",
        DocValue::object(
            {{"a", labels_value(w.a.member_labels())},
             {"x", DocValue::sym(w.a.ground().label(w.x))},
             {"y", DocValue::sym(w.a.ground().label(w.y))}}));
  }
  doc.fields.emplace_back(
      "characterizations",
      DocValue::object({{"aep", bool_value(recognition.aep.ok)},
                        {"accessibility",
                         bool_value(recognition.accessibility.ok)},
                        {"cover", bool_value(recognition.cover.ok)}}));
  return doc;
}

std::string serialize(const ClosureSystem& system, Format format) {
  return write_document(system_document(system), format);
}

std::string serialize(const TotalOrder& order, Format format) {
  return write_document(order_document(order), format);
}

std::string serialize(const Subset& subset, Format format) {
  return write_document(subset_document(subset), format);
}

std::string serialize(const Decomposition& d, Format format) {
  return write_document(decomposition_document(d), format);
}

}  // namespace cgeo
