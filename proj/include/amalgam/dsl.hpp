// Copyright 2026 The amalgam-lab Authors
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

// Ring expressions: an LL(1) grammar of keyword constructors, a
// recursive-descent parser with positioned diagnostics, a canonical printer,
// and elaboration into rings and amalgamations. Grammar in docs/dsl.md.

#ifndef AMALGAM_DSL_HPP
#define AMALGAM_DSL_HPP

#include <amalgam/amalgamation.hpp>
#include <amalgam/error.hpp>
#include <amalgam/hom.hpp>
#include <amalgam/ideal.hpp>
#include <amalgam/quotient.hpp>
#include <amalgam/ring.hpp>

#include <cctype>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace amalgam::dsl {

struct SourcePos {
  int line = 1;
  int column = 1;
};

/// Integer literal or parenthesized tuple of terms.
struct Term {
  long long value = 0;
  std::vector<Term> items;
  bool tuple = false;

  static Term integer(long long v) { return Term{v, {}, false}; }
  static Term of(std::vector<Term> xs) { return Term{0, std::move(xs), true}; }

  friend bool operator==(const Term&, const Term&) = default;
};

struct IdealSpec {
  enum class Kind { generators, full, zero };
  Kind kind = Kind::generators;
  std::vector<Term> generators;
  SourcePos pos;

  friend bool operator==(const IdealSpec& a, const IdealSpec& b) {
    return a.kind == b.kind && a.generators == b.generators;
  }
};

/// An ideal of A used as an A-module, or the quotient A/I.
struct ModuleSpec {
  bool coset = false;
  IdealSpec ideal;

  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

struct HomSpec {
  enum class Kind { id, diag, canon, table };
  Kind kind = Kind::id;
  std::vector<Term> table;
  SourcePos pos;

  friend bool operator==(const HomSpec& a, const HomSpec& b) { return a.kind == b.kind && a.table == b.table; }
};

struct RingExpr {
  enum class Kind { zmod, prod, quot, triv, dupl, amalg };
  Kind kind = Kind::zmod;
  long long modulus = 0;           // zmod
  std::vector<RingExpr> children;  // prod: factors; quot/triv/dupl: 1; amalg: A, B
  IdealSpec ideal;                 // quot, dupl, amalg
  ModuleSpec module;               // triv
  HomSpec hom;                     // amalg
  SourcePos pos;

  friend bool operator==(const RingExpr& a, const RingExpr& b) {
    return a.kind == b.kind && a.modulus == b.modulus && a.children == b.children && a.ideal == b.ideal &&
           a.module == b.module && a.hom == b.hom;
  }
};

/// A positioned diagnostic. `expected` lists the tokens that would have
/// been accepted at `pos`.
class ParseError : public Error {
 public:
  enum class Kind { lexical, syntax, arity };

  ParseError(Kind kind, SourcePos pos, std::vector<std::string> expected, const std::string& message)
      : Error(render(kind, pos, expected, message)),
        kind_(kind),
        pos_(pos),
        expected_(std::move(expected)),
        message_(message) {}

  Kind kind() const noexcept { return kind_; }
  SourcePos pos() const noexcept { return pos_; }
  int line() const noexcept { return pos_.line; }
  int column() const noexcept { return pos_.column; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& message() const noexcept { return message_; }

 private:
  static std::string render(Kind kind, SourcePos pos, const std::vector<std::string>& expected,
                            const std::string& message) {
    std::string s = std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": ";
    s += kind == Kind::lexical ? "lexical error: " : kind == Kind::syntax ? "syntax error: " : "arity error: ";
    s += message;
    if (!expected.empty()) {
      s += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) s += i + 1 == expected.size() ? " or " : ", ";
        s += expected[i];
      }
      s += ")";
    }
    return s;
  }

  Kind kind_;
  SourcePos pos_;
  std::vector<std::string> expected_;
  std::string message_;
};

/// A well-formed expression that does not denote a ring (foreign ideal
/// generators, invalid homomorphism, quotient by the whole ring, ...).
class ElaborationError : public Error {
 public:
  ElaborationError(SourcePos pos, const std::string& message)
      : Error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message), pos_(pos) {}

  SourcePos pos() const noexcept { return pos_; }

 private:
  SourcePos pos_;
};

// ---------------------------------------------------------------------------
// Lexer

namespace detail {

struct Token {
  enum class Kind { ident, integer, lparen, rparen, comma, colon, lbracket, rbracket, minus, end };
  Kind kind;
  std::string text;
  long long value = 0;
  SourcePos pos;
};

inline std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::ident: return "'" + t.text + "'";
    case Token::Kind::integer: return "integer " + t.text;
    case Token::Kind::end: return "end of input";
    default: return "'" + t.text + "'";
  }
}

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < src.size()) {
    const unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    const SourcePos start = pos;
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Token::Kind::ident, std::string(src.substr(i, j - i)), 0, start});
      advance(j - i);
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      const std::string digits(src.substr(i, j - i));
      if (digits.size() > 18) throw ParseError(ParseError::Kind::lexical, start, {}, "integer literal too large");
      out.push_back({Token::Kind::integer, digits, std::stoll(digits), start});
      advance(j - i);
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '(': k = Token::Kind::lparen; break;
      case ')': k = Token::Kind::rparen; break;
      case ',': k = Token::Kind::comma; break;
      case ':': k = Token::Kind::colon; break;
      case '[': k = Token::Kind::lbracket; break;
      case ']': k = Token::Kind::rbracket; break;
      case '-': k = Token::Kind::minus; break;
      default: {
        std::string shown = std::isprint(c) ? std::string(1, static_cast<char>(c))
                                             : "\\x" + std::string(1, "0123456789abcdef"[c >> 4]) +
                                                   std::string(1, "0123456789abcdef"[c & 15]);
        throw ParseError(ParseError::Kind::lexical, start, {}, "unexpected character '" + shown + "'");
      }
    }
    out.push_back({k, std::string(1, static_cast<char>(c)), 0, start});
    advance(1);
  }
  out.push_back({Token::Kind::end, "", 0, pos});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  RingExpr parse_program() {
    RingExpr e = parse_expr();
    expect_end();
    return e;
  }

  IdealSpec parse_ideal_program() {
    IdealSpec s = parse_ideal();
    expect_end();
    return s;
  }

 private:
  using K = Token::Kind;

  const Token& peek() const { return tokens_[at_]; }
  const Token& take() { return tokens_[at_++]; }
  bool is(K k) const { return peek().kind == k; }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what = {}) const {
    throw ParseError(ParseError::Kind::syntax, peek().pos, std::move(expected),
                     what.empty() ? "unexpected " + describe(peek()) : what);
  }

  [[noreturn]] void arity(const std::string& ctor, const std::string& wanted) const {
    throw ParseError(ParseError::Kind::arity, peek().pos, {}, ctor + " takes " + wanted);
  }

  void expect(K k, const char* shown) {
    if (!is(k)) fail({std::string("'") + shown + "'"});
    take();
  }

  void expect_end() {
    if (!is(K::end)) fail({"end of input"});
  }

  /// ',' between arguments; a ')' here means too few arguments.
  void separator(const std::string& ctor, const std::string& wanted) {
    if (is(K::rparen)) arity(ctor, wanted);
    expect(K::comma, ",");
  }

  /// ')' after the last argument; a ',' here means too many arguments.
  void closer(const std::string& ctor, const std::string& wanted) {
    if (is(K::comma)) arity(ctor, wanted);
    expect(K::rparen, ")");
  }

  RingExpr parse_expr() {
    static const std::vector<std::string> ctors{"'zmod'", "'prod'", "'quot'", "'triv'", "'dupl'", "'amalg'"};
    if (!is(K::ident)) fail(ctors);
    const Token& head = peek();
    RingExpr e;
    e.pos = head.pos;
    const std::string name = head.text;
    if (name == "zmod") {
      take();
      e.kind = RingExpr::Kind::zmod;
      expect(K::lparen, "(");
      if (!is(K::integer)) fail({"integer"});
      e.modulus = take().value;
      closer("zmod", "exactly 1 argument");
    } else if (name == "prod") {
      take();
      e.kind = RingExpr::Kind::prod;
      expect(K::lparen, "(");
      e.children.push_back(parse_expr());
      while (is(K::comma)) {
        take();
        e.children.push_back(parse_expr());
      }
      expect(K::rparen, ")");
    } else if (name == "quot" || name == "dupl") {
      take();
      e.kind = name == "quot" ? RingExpr::Kind::quot : RingExpr::Kind::dupl;
      expect(K::lparen, "(");
      e.children.push_back(parse_expr());
      separator(name, "exactly 2 arguments");
      e.ideal = parse_ideal();
      closer(name, "exactly 2 arguments");
    } else if (name == "triv") {
      take();
      e.kind = RingExpr::Kind::triv;
      expect(K::lparen, "(");
      e.children.push_back(parse_expr());
      separator(name, "exactly 2 arguments");
      e.module = parse_module();
      closer(name, "exactly 2 arguments");
    } else if (name == "amalg") {
      take();
      e.kind = RingExpr::Kind::amalg;
      expect(K::lparen, "(");
      e.children.push_back(parse_expr());
      separator(name, "exactly 4 arguments");
      e.children.push_back(parse_expr());
      separator(name, "exactly 4 arguments");
      e.hom = parse_hom();
      separator(name, "exactly 4 arguments");
      e.ideal = parse_ideal();
      closer(name, "exactly 4 arguments");
    } else {
      fail(ctors, "unknown constructor '" + name + "'");
    }
    return e;
  }

  IdealSpec parse_ideal() {
    static const std::vector<std::string> forms{"'ideal'", "'full'", "'zero'"};
    IdealSpec s;
    s.pos = peek().pos;
    if (!is(K::ident)) fail(forms);
    const std::string name = peek().text;
    if (name == "full") {
      take();
      s.kind = IdealSpec::Kind::full;
    } else if (name == "zero") {
      take();
      s.kind = IdealSpec::Kind::zero;
    } else if (name == "ideal") {
      take();
      s.kind = IdealSpec::Kind::generators;
      expect(K::lparen, "(");
      if (!is(K::rparen)) {
        s.generators.push_back(parse_term());
        while (is(K::comma)) {
          take();
          s.generators.push_back(parse_term());
        }
      }
      if (!is(K::rparen)) fail({"','", "')'"});
      take();
    } else {
      fail(forms, "unknown ideal form '" + name + "'");
    }
    return s;
  }

  ModuleSpec parse_module() {
    ModuleSpec m;
    if (is(K::ident) && peek().text == "coset") {
      take();
      m.coset = true;
      expect(K::lparen, "(");
      m.ideal = parse_ideal();
      closer("coset", "exactly 1 argument");
      return m;
    }
    if (!is(K::ident)) fail({"'ideal'", "'full'", "'zero'", "'coset'"});
    m.ideal = parse_ideal();
    return m;
  }

  HomSpec parse_hom() {
    static const std::vector<std::string> forms{"'id'", "'diag'", "'canon'", "'table'"};
    HomSpec h;
    h.pos = peek().pos;
    if (!is(K::ident)) fail(forms);
    const std::string name = peek().text;
    if (name == "id") {
      h.kind = HomSpec::Kind::id;
    } else if (name == "diag") {
      h.kind = HomSpec::Kind::diag;
    } else if (name == "canon") {
      h.kind = HomSpec::Kind::canon;
    } else if (name == "table") {
      take();
      h.kind = HomSpec::Kind::table;
      expect(K::colon, ":");
      expect(K::lbracket, "[");
      if (!is(K::rbracket)) {
        h.table.push_back(parse_term());
        while (is(K::comma)) {
          take();
          h.table.push_back(parse_term());
        }
      }
      if (!is(K::rbracket)) fail({"','", "']'"});
      take();
      return h;
    } else {
      fail(forms, "unknown homomorphism form '" + name + "'");
    }
    take();
    return h;
  }

  Term parse_term() {
    if (is(K::minus)) {
      take();
      if (!is(K::integer)) fail({"integer"});
      return Term::integer(-take().value);
    }
    if (is(K::integer)) return Term::integer(take().value);
    if (is(K::lparen)) {
      take();
      std::vector<Term> items;
      items.push_back(parse_term());
      while (is(K::comma)) {
        take();
        items.push_back(parse_term());
      }
      if (!is(K::rparen)) fail({"','", "')'"});
      take();
      return Term::of(std::move(items));
    }
    fail({"integer", "'-'", "'('"});
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
};

}  // namespace detail

inline RingExpr parse(std::string_view text) { return detail::Parser(text).parse_program(); }

/// Parses a lone ideal spec such as "ideal((1,0),2)" or "full".
inline IdealSpec parse_ideal_spec(std::string_view text) { return detail::Parser(text).parse_ideal_program(); }

// ---------------------------------------------------------------------------
// Printer

inline std::string print(const Term& t) {
  if (!t.tuple) return std::to_string(t.value);
  std::string s = "(";
  for (std::size_t i = 0; i < t.items.size(); ++i) {
    if (i) s += ',';
    s += print(t.items[i]);
  }
  return s + ")";
}

inline std::string print(const IdealSpec& s) {
  switch (s.kind) {
    case IdealSpec::Kind::full: return "full";
    case IdealSpec::Kind::zero: return "zero";
    case IdealSpec::Kind::generators: break;
  }
  std::string out = "ideal(";
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    if (i) out += ", ";
    out += print(s.generators[i]);
  }
  return out + ")";
}

inline std::string print(const ModuleSpec& m) { return m.coset ? "coset(" + print(m.ideal) + ")" : print(m.ideal); }

inline std::string print(const HomSpec& h) {
  switch (h.kind) {
    case HomSpec::Kind::id: return "id";
    case HomSpec::Kind::diag: return "diag";
    case HomSpec::Kind::canon: return "canon";
    case HomSpec::Kind::table: break;
  }
  std::string out = "table:[";
  for (std::size_t i = 0; i < h.table.size(); ++i) {
    if (i) out += ", ";
    out += print(h.table[i]);
  }
  return out + "]";
}

inline std::string print(const RingExpr& e) {
  switch (e.kind) {
    case RingExpr::Kind::zmod: return "zmod(" + std::to_string(e.modulus) + ")";
    case RingExpr::Kind::prod: {
      std::string s = "prod(";
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) s += ", ";
        s += print(e.children[i]);
      }
      return s + ")";
    }
    case RingExpr::Kind::quot: return "quot(" + print(e.children[0]) + ", " + print(e.ideal) + ")";
    case RingExpr::Kind::triv: return "triv(" + print(e.children[0]) + ", " + print(e.module) + ")";
    case RingExpr::Kind::dupl: return "dupl(" + print(e.children[0]) + ", " + print(e.ideal) + ")";
    case RingExpr::Kind::amalg:
      return "amalg(" + print(e.children[0]) + ", " + print(e.children[1]) + ", " + print(e.hom) + ", " +
             print(e.ideal) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Elaboration

/// A ring, plus the amalgamation it came from for dupl/amalg expressions.
struct Elaborated {
  FiniteRing ring;
  std::optional<Amalgamation> amalgamation;
  std::string canonical;
};

/// Resolves a term to an element of `r`. Integers denote n·1; tuples follow
/// the ring's structure.
inline Elem resolve_term(const FiniteRing& r, const Term& t) {
  if (!t.tuple) return r.from_integer(t.value);
  auto need = [&](std::size_t n) {
    if (t.items.size() != n)
      throw AlgebraError("tuple " + print(t) + " has " + std::to_string(t.items.size()) + " entries, " + r.label() +
                         " needs " + std::to_string(n));
  };
  if (const auto* p = r.try_structure<ProductRing>()) {
    need(p->factors.size());
    std::vector<Elem> parts;
    for (std::size_t i = 0; i < p->factors.size(); ++i) parts.push_back(resolve_term(p->factors[i], t.items[i]));
    return p->compose(parts);
  }
  if (const auto* te = r.try_structure<TrivialExtension>()) {
    need(2);
    const Elem a = resolve_term(te->base, t.items[0]);
    const Elem e = te->module.from_ring(resolve_term(te->base, t.items[1]));
    if (e == kNoElem) throw AlgebraError(print(t.items[1]) + " is not an element of the module " + te->module.label());
    return te->pack(a, e);
  }
  if (const auto* am = r.try_structure<AmalgamationRing>()) {
    need(2);
    const Elem x = am->from_pair(resolve_term(am->A, t.items[0]), resolve_term(am->B, t.items[1]));
    if (x == kNoElem) throw AlgebraError(print(t) + " is not of the form (a, f(a)+j) with j in J");
    return x;
  }
  if (const auto* q = r.try_structure<QuotientRing>()) return q->cosets.coset_of[resolve_term(q->parent, t)];
  if (const auto* s = r.try_structure<SubRing>()) {
    const Elem x = s->position[resolve_term(s->parent, t)];
    if (x == kNoElem) throw AlgebraError(print(t) + " is not in " + r.label());
    return x;
  }
  throw AlgebraError("tuple " + print(t) + " does not denote an element of " + r.label());
}

/// Renders an element as a term that resolve_term maps back to it.
inline Term element_term(const FiniteRing& r, Elem x) {
  if (const auto* p = r.try_structure<ProductRing>()) {
    std::vector<Term> items;
    for (std::size_t i = 0; i < p->factors.size(); ++i) items.push_back(element_term(p->factors[i], p->component(x, i)));
    return Term::of(std::move(items));
  }
  if (const auto* te = r.try_structure<TrivialExtension>())
    return Term::of({element_term(te->base, te->base_part(x)),
                     element_term(te->base, te->module.representative(te->module_part(x)))});
  if (const auto* am = r.try_structure<AmalgamationRing>())
    return Term::of({element_term(am->A, am->first(x)), element_term(am->B, am->second(x))});
  if (const auto* q = r.try_structure<QuotientRing>()) return element_term(q->parent, q->cosets.reps[x]);
  if (const auto* s = r.try_structure<SubRing>()) return element_term(s->parent, s->members[x]);
  return Term::integer(x);
}

inline Ideal resolve_ideal(const FiniteRing& r, const IdealSpec& s) {
  switch (s.kind) {
    case IdealSpec::Kind::full: return whole_ideal(r);
    case IdealSpec::Kind::zero: return zero_ideal(r);
    case IdealSpec::Kind::generators: break;
  }
  std::vector<Elem> gens;
  try {
    for (const auto& t : s.generators) gens.push_back(resolve_term(r, t));
  } catch (const AlgebraError& e) {
    throw ElaborationError(s.pos, e.what());
  }
  return ideal_generated(r, std::span<const Elem>(gens));
}

/// Spec for an ideal by a greedy generating set.
inline IdealSpec ideal_spec_of(const Ideal& i) {
  IdealSpec s;
  if (i.is_zero()) {
    s.kind = IdealSpec::Kind::zero;
    return s;
  }
  if (i.is_whole()) {
    s.kind = IdealSpec::Kind::full;
    return s;
  }
  amalgam::detail::IdealBuilder b(i.ring());
  for (Elem x : i.elements()) {
    if (b.contains(x)) continue;
    s.generators.push_back(element_term(i.ring(), x));
    b.absorb_generator(x);
  }
  return s;
}

/// Elaborates expressions into rings, sharing structurally equal
/// subexpressions so that `id` can relate A and B.
class Elaborator {
 public:
  explicit Elaborator(ConstructionOptions opts = {}) : opts_(opts) {}

  Elaborated elaborate(const RingExpr& e) {
    const std::string key = print(e);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Elaborated out = build(e);
    out.canonical = key;
    memo_.emplace(key, out);
    return out;
  }

 private:
  Elaborated build(const RingExpr& e) {
    try {
      switch (e.kind) {
        case RingExpr::Kind::zmod: return {make_zmod(e.modulus, opts_), std::nullopt, {}};
        case RingExpr::Kind::prod: {
          std::vector<FiniteRing> fs;
          for (const auto& c : e.children) fs.push_back(elaborate(c).ring);
          return {make_product(std::move(fs), opts_), std::nullopt, {}};
        }
        case RingExpr::Kind::quot: {
          const FiniteRing r = elaborate(e.children[0]).ring;
          const Ideal i = resolve_ideal(r, e.ideal);
          if (i.is_whole()) throw ElaborationError(e.ideal.pos, "quotient by the whole ring is the zero ring");
          return {make_quotient(r, i, opts_).ring, std::nullopt, {}};
        }
        case RingExpr::Kind::triv: {
          const FiniteRing a = elaborate(e.children[0]).ring;
          const Ideal i = resolve_ideal(a, e.module.ideal);
          const FiniteModule m = e.module.coset ? FiniteModule::of_quotient(i) : FiniteModule::of_ideal(i);
          return {make_trivial_extension(a, m, opts_), std::nullopt, {}};
        }
        case RingExpr::Kind::dupl: {
          const FiniteRing a = elaborate(e.children[0]).ring;
          Amalgamation am = make_duplication(a, resolve_ideal(a, e.ideal), opts_);
          FiniteRing r = am.ring();
          return {std::move(r), std::move(am), {}};
        }
        case RingExpr::Kind::amalg: {
          const Elaborated ea = elaborate(e.children[0]);
          const Elaborated eb = elaborate(e.children[1]);
          const RingHom f = resolve_hom(ea.ring, eb.ring, e.hom);
          Amalgamation am = make_amalgamation(ea.ring, eb.ring, f, resolve_ideal(eb.ring, e.ideal), opts_);
          FiniteRing r = am.ring();
          return {std::move(r), std::move(am), {}};
        }
      }
    } catch (const ElaborationError&) {
      throw;
    } catch (const AlgebraError& err) {
      throw ElaborationError(e.pos, err.what());
    }
    throw ElaborationError(e.pos, "unknown expression kind");
  }

  RingHom resolve_hom(const FiniteRing& a, const FiniteRing& b, const HomSpec& h) {
    try {
      switch (h.kind) {
        case HomSpec::Kind::id: {
          if (a == b) return identity_hom(a);
          if (a.order() != b.order()) throw AlgebraError("id needs rings of equal order");
          std::vector<Elem> t(a.order());
          for (Elem x = 0; x < t.size(); ++x) t[x] = x;
          return make_hom(a, b, std::move(t));
        }
        case HomSpec::Kind::diag: {
          const auto* p = b.try_structure<ProductRing>();
          if (!p) throw AlgebraError("diag needs a product as target");
          std::vector<Elem> t(a.order());
          std::vector<Elem> parts(p->factors.size());
          for (Elem x = 0; x < t.size(); ++x) {
            for (std::size_t i = 0; i < parts.size(); ++i) {
              if (p->factors[i].order() != a.order())
                throw AlgebraError("diag needs every factor to have the order of the source");
              parts[i] = x;
            }
            t[x] = p->compose(parts);
          }
          return make_hom(a, b, std::move(t));
        }
        case HomSpec::Kind::canon: return canonical_hom(a, b);
        case HomSpec::Kind::table: {
          if (h.table.size() != a.order())
            throw AlgebraError("table has " + std::to_string(h.table.size()) + " entries, source has " +
                               std::to_string(a.order()));
          std::vector<Elem> t;
          for (const auto& term : h.table) t.push_back(resolve_term(b, term));
          return make_hom(a, b, std::move(t));
        }
      }
    } catch (const AlgebraError& err) {
      throw ElaborationError(h.pos, err.what());
    }
    throw ElaborationError(h.pos, "unknown homomorphism form");
  }

  /// A → A/I, A → A ∝ E, or the unique map out of Z/n.
  static RingHom canonical_hom(const FiniteRing& a, const FiniteRing& b) {
    if (const auto* q = b.try_structure<QuotientRing>(); q && q->parent == a)
      return make_hom(a, b, q->cosets.coset_of);
    if (const auto* te = b.try_structure<TrivialExtension>(); te && te->base == a)
      return trivial_extension_embedding(b);
    if (a.kind() == RingKind::zmod) {
      std::vector<Elem> t(a.order());
      for (Elem x = 0; x < t.size(); ++x) t[x] = b.from_integer(x);
      return make_hom(a, b, std::move(t));
    }
    throw AlgebraError("no canonical homomorphism from " + a.label() + " to " + b.label());
  }

  ConstructionOptions opts_;
  std::map<std::string, Elaborated> memo_;
};

inline Elaborated elaborate(const RingExpr& e, ConstructionOptions opts = {}) { return Elaborator(opts).elaborate(e); }

}  // namespace amalgam::dsl

#endif  // AMALGAM_DSL_HPP
