/*
   Copyright 2026 The skew authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

/**
 * @file text.hpp
 * @brief Printing and parsing of scalars, K[y] polynomials, skew polynomials and ring specs.
 *
 * Skew polynomials are written in left-coefficient form, e.g.
 * `t^2 - (y^2 + 1)*t - 3*y`.  Grammar (precedence ^ > unary - > * / > binary + -):
 *
 *     expr   := term (('+' | '-') term)*
 *     term   := unary (('*' | '/') unary)*
 *     unary  := '-' unary | power
 *     power  := atom ('^' integer)?
 *     atom   := integer ('mod' integer)? | 'y' | 't' | '(' expr ')'
 *
 * A factor containing t may only be followed by scalar factors, so every term
 * reads coefficient * t^n.
 */

#include "skew/ring.hpp"
#include "skew/skewpoly.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace skew {

/// Syntax or semantic error in textual input; column is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t column)
      : std::runtime_error(msg + " at column " + std::to_string(column)), message_(msg), column_(column) {}
  [[nodiscard]] std::size_t column() const { return column_; }
  /// The message without the position suffix.
  [[nodiscard]] const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t column_;
};

// ---------------------------------------------------------------------------
// Printing.

inline bool is_negative(const Rational& a) { return a.num() < 0; }
inline bool is_negative(const Residue& a) { return a.symmetric() < 0; }

template <class K>
std::string to_string(const K& a)
  requires requires { a.to_string(); }
{
  return a.to_string();
}

namespace detail {

// c * y^k with c != 0 and the sign of c dropped: "3*y^2", "y", "1".
template <class K>
std::string unsigned_monomial(const K& c, int k) {
  const K mag = is_negative(c) ? -c : c;
  const bool unit = mag == c.field().one();
  std::string var = k == 0 ? "" : (k == 1 ? "y" : "y^" + std::to_string(k));
  if (k == 0) return mag.to_string();
  return unit ? var : mag.to_string() + "*" + var;
}

}  // namespace detail

/// "2*y^2 - y + 1"; zero prints as "0".
template <class K>
std::string to_string(const YPoly<K>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto cs = p.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) {
    if (cs[i].is_zero()) continue;
    const bool neg = is_negative(cs[i]);
    if (out.empty()) {
      out = neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    out += detail::unsigned_monomial(cs[i], static_cast<int>(i));
  }
  return out;
}

/// Left-coefficient form, highest power of t first.
template <class K>
std::string to_string(const SkewPoly<K>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& cs = f.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) {
    const YPoly<K>& c = cs[i];
    if (c.is_zero()) continue;
    const std::string tpow = i == 1 ? "t" : "t^" + std::to_string(i);
    if (i == 0 || c.is_monomial()) {
      // expand term by term; a monomial coefficient prints inline
      const auto ys = c.coeffs();
      for (std::size_t k = ys.size(); k-- > 0;) {
        if (ys[k].is_zero()) continue;
        const bool neg = is_negative(ys[k]);
        if (out.empty()) {
          out = neg ? "-" : "";
        } else {
          out += neg ? " - " : " + ";
        }
        const K mag = neg ? -ys[k] : ys[k];
        if (i == 0) {
          out += detail::unsigned_monomial(ys[k], static_cast<int>(k));
        } else if (k == 0 && mag == c.field().one()) {
          out += tpow;
        } else {
          out += detail::unsigned_monomial(ys[k], static_cast<int>(k)) + "*" + tpow;
        }
      }
      continue;
    }
    const bool neg = is_negative(c.leading_coeff());
    if (out.empty()) {
      out = neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    out += "(" + to_string(neg ? -c : c) + ")*" + tpow;
  }
  return out;
}

inline std::string to_string(const RationalField&) { return "Q"; }
inline std::string to_string(const PrimeField& f) { return "F" + std::to_string(f.p); }

/// "quantum q=2", "weyl q=2", "ah h=y^2", "twisted alpha=2 beta=1".
template <class K>
std::string ring_to_string(const RingSpec<K>& r) {
  switch (r.delta_map().kind) {
    case DeltaKind::quantized_weyl: return "weyl q=" + r.alpha().to_string();
    case DeltaKind::a_h: return "ah h=" + to_string(r.h());
    case DeltaKind::zero: break;
  }
  if (r.ring_class() == RingClass::quantum_plane) return "quantum q=" + r.alpha().to_string();
  return "twisted alpha=" + r.alpha().to_string() + " beta=" + r.beta().to_string();
}

// ---------------------------------------------------------------------------
// Parsing.

namespace detail {

inline BigInt parse_bigint(std::string_view digits) {
  BigInt v = 0;
  for (char ch : digits) v = v * 10 + (ch - '0');
  return v;
}

inline Rational scalar_from_integer(const RationalField&, const BigInt& n) { return Rational(n, 1); }
inline Residue scalar_from_integer(const PrimeField& f, const BigInt& n) {
  return Residue(static_cast<std::uint64_t>(n % f.p), f.p);
}

// A term-indexed sum: c[i] is the left coefficient of t^i.
template <class K>
struct Lowered {
  std::vector<YPoly<K>> c;
  std::size_t column = 0;  // where the expression starts, for messages

  [[nodiscard]] bool has_t() const {
    for (std::size_t i = 1; i < c.size(); ++i) {
      if (!c[i].is_zero()) return true;
    }
    return false;
  }
  [[nodiscard]] YPoly<K> coeff(std::size_t i, const FieldOf<K>& f) const { return i < c.size() ? c[i] : YPoly<K>(f); }
  [[nodiscard]] bool is_bare_t(const FieldOf<K>& f) const {
    return c.size() == 2 && c[0].is_zero() && c[1] == YPoly<K>::one(f);
  }
};

template <class K>
class Parser {
 public:
  using Field = FieldOf<K>;

  Parser(std::string_view text, Field field, bool allow_t) : s_(text), field_(std::move(field)), allow_t_(allow_t) {}

  Lowered<K> parse_all() {
    Lowered<K> v = expr();
    skip_ws();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at + 1); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char ch) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == ch;
  }

  Lowered<K> constant(const K& k, std::size_t at) const { return {{YPoly<K>::constant(k)}, at}; }

  static Lowered<K> add(Lowered<K> a, const Lowered<K>& b, bool subtract) {
    if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), YPoly<K>(b.c.front().field()));
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] = subtract ? a.c[i] - b.c[i] : a.c[i] + b.c[i];
    return a;
  }

  Lowered<K> expr() {
    Lowered<K> acc = term();
    while (true) {
      skip_ws();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) return acc;
      const bool minus = s_[pos_] == '-';
      ++pos_;
      acc = add(std::move(acc), term(), minus);
    }
  }

  Lowered<K> term() {
    Lowered<K> acc = unary();
    while (true) {
      skip_ws();
      if (pos_ >= s_.size() || (s_[pos_] != '*' && s_[pos_] != '/')) return acc;
      const char op = s_[pos_];
      const std::size_t op_pos = pos_;
      ++pos_;
      Lowered<K> rhs = unary();
      if (op == '/') {
        if (rhs.has_t() || !rhs.coeff(0, field_).is_constant() || rhs.coeff(0, field_).is_zero()) {
          fail_at("division is only by nonzero constants", op_pos);
        }
        const K inv = rhs.coeff(0, field_).constant_term().inv();
        for (auto& c : acc.c) c = inv * c;
        continue;
      }
      if (!acc.has_t()) {
        const YPoly<K> a = acc.coeff(0, field_);
        for (auto& c : rhs.c) c = a * c;
        rhs.column = acc.column;
        acc = std::move(rhs);
      } else if (!rhs.has_t() && rhs.coeff(0, field_).is_constant()) {
        const YPoly<K> k = rhs.coeff(0, field_);
        for (auto& c : acc.c) c = k * c;
      } else {
        fail_at("left-coefficient form required: write coefficient*t^n with t last in each term", rhs.column);
      }
    }
  }

  Lowered<K> unary() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '-') {
      ++pos_;
      Lowered<K> v = unary();
      for (auto& c : v.c) c = -c;
      return v;
    }
    return power();
  }

  Lowered<K> power() {
    Lowered<K> base = atom();
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != '^') return base;
    const std::size_t caret = pos_;
    ++pos_;
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    const BigInt e = parse_bigint(s_.substr(start, pos_ - start));
    if (e > 100000) fail_at("exponent too large", start);
    const auto n = static_cast<unsigned>(e);
    if (base.is_bare_t(field_)) {
      Lowered<K> out{std::vector<YPoly<K>>(n + 1, YPoly<K>(field_)), base.column};
      out.c[n] = YPoly<K>::one(field_);
      return out;
    }
    if (base.has_t()) fail_at("left-coefficient form required: only t itself may be raised to a power", caret);
    return {{pow(base.coeff(0, field_), n)}, base.column};
  }

  Lowered<K> atom() {
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char ch = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) return integer_literal();
    if (ch == '(') {
      ++pos_;
      Lowered<K> v = expr();
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      v.column = at;
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t end = pos_;
      while (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) ++end;
      const std::string_view word = s_.substr(pos_, end - pos_);
      if (word == "y") {
        pos_ = end;
        return {{YPoly<K>::y(field_)}, at};
      }
      if (word == "t") {
        if (!allow_t_) fail("t is not allowed here");
        pos_ = end;
        return {{YPoly<K>(field_), YPoly<K>::one(field_)}, at};
      }
      fail("unknown symbol '" + std::string(word) + "'");
    }
    fail(std::string("unexpected '") + ch + "'");
  }

  Lowered<K> integer_literal() {
    const std::size_t at = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const BigInt n = parse_bigint(s_.substr(at, pos_ - at));
    // optional "mod p"
    std::size_t look = pos_;
    while (look < s_.size() && std::isspace(static_cast<unsigned char>(s_[look]))) ++look;
    if (s_.substr(look, 3) == "mod" && (look + 3 >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[look + 3])))) {
      pos_ = look + 3;
      skip_ws();
      const std::size_t ms = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (ms == pos_) fail("expected a modulus after 'mod'");
      const BigInt p = parse_bigint(s_.substr(ms, pos_ - ms));
      if constexpr (std::is_same_v<K, Residue>) {
        if (p != BigInt(field_.p)) fail_at("wrong field literal: modulus does not match " + to_string(field_), at);
      } else {
        fail_at("wrong field literal: 'mod' is not allowed over Q", at);
      }
    }
    return constant(scalar_from_integer(field_, n), at);
  }

  std::string_view s_;
  Field field_;
  bool allow_t_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a scalar expression (integers, + - * / ^, parentheses) into K.
template <class K>
K parse_scalar(std::string_view text, const FieldOf<K>& field) {
  auto v = detail::Parser<K>(text, field, false).parse_all();
  const YPoly<K> p = v.coeff(0, field);
  if (!p.is_constant()) throw ParseError("expected a scalar, found a polynomial in y", 1);
  return p.constant_term();
}

template <class K>
YPoly<K> parse_ypoly(std::string_view text, const FieldOf<K>& field) {
  return detail::Parser<K>(text, field, false).parse_all().coeff(0, field);
}

template <class K>
SkewPoly<K> parse_poly(std::string_view text, const RingPtr<K>& ring) {
  auto v = detail::Parser<K>(text, ring->field(), true).parse_all();
  return SkewPoly<K>(ring, std::move(v.c));
}

/// "Q" or "F<p>" / "F_<p>".
using AnyField = std::variant<RationalField, PrimeField>;

inline AnyField parse_field(std::string_view text) {
  if (text == "Q") return RationalField{};
  std::string_view rest = text;
  if (!rest.empty() && rest.front() == 'F') rest.remove_prefix(1);
  if (!rest.empty() && rest.front() == '_') rest.remove_prefix(1);
  if (rest.size() == text.size() || rest.empty() || rest.size() > 10) {
    throw ParseError("field must be Q or F<p>, got '" + std::string(text) + "'", 1);
  }
  for (char ch : rest) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("field must be Q or F<p>", 1);
  }
  const std::uint64_t p = std::stoull(std::string(rest));
  try {
    return PrimeField(p);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 2);
  }
}

/// "quantum q=<s>", "weyl q=<s>", "ah h=<ypoly>", "twisted alpha=<s> beta=<s>".
template <class K>
RingSpec<K> parse_ring(std::string_view text, const FieldOf<K>& field) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  const std::size_t kind_at = i;
  while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
  const std::string kind(text.substr(kind_at, i - kind_at));

  // key=value pairs; a value runs to the next " key=" or the end
  std::vector<std::pair<std::string, std::pair<std::string, std::size_t>>> kv;
  while (true) {
    skip();
    if (i >= text.size()) break;
    const std::size_t key_at = i;
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
    const std::string key(text.substr(key_at, i - key_at));
    if (key.empty() || i >= text.size() || text[i] != '=') throw ParseError("expected key=value", key_at + 1);
    ++i;
    const std::size_t val_at = i;
    std::size_t end = i;
    while (end < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[end]))) {
        std::size_t j = end;
        while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        std::size_t k = j;
        while (k < text.size() && std::isalpha(static_cast<unsigned char>(text[k]))) ++k;
        if (k > j && k < text.size() && text[k] == '=') break;
      }
      ++end;
    }
    kv.push_back({key, {std::string(text.substr(val_at, end - val_at)), val_at}});
    i = end;
  }
  auto take = [&](const std::string& key) -> std::pair<std::string, std::size_t> {
    for (auto& [k, v] : kv) {
      if (k == key) return v;
    }
    throw ParseError("ring '" + kind + "' requires " + key + "=", text.size() + 1);
  };
  auto expect_keys = [&](std::initializer_list<const char*> keys) {
    for (auto& [k, v] : kv) {
      bool ok = false;
      for (const char* want : keys) ok = ok || k == want;
      if (!ok) throw ParseError("unexpected key '" + k + "' for ring '" + kind + "'", v.second);
    }
  };
  auto scalar = [&](const std::pair<std::string, std::size_t>& v) {
    try {
      return parse_scalar<K>(v.first, field);
    } catch (const ParseError& e) {
      throw ParseError(e.message() + " in ring value", v.second + e.column());
    }
  };
  try {
    if (kind == "quantum") {
      expect_keys({"q"});
      return RingSpec<K>::quantum_plane(field, scalar(take("q")));
    }
    if (kind == "weyl") {
      expect_keys({"q"});
      return RingSpec<K>::quantized_weyl(field, scalar(take("q")));
    }
    if (kind == "ah") {
      expect_keys({"h"});
      const auto v = take("h");
      try {
        return RingSpec<K>::a_h(field, parse_ypoly<K>(v.first, field));
      } catch (const ParseError& e) {
        throw ParseError(e.message() + " in ring value", v.second + e.column());
      }
    }
    if (kind == "twisted") {
      expect_keys({"alpha", "beta"});
      return RingSpec<K>::twisted(field, scalar(take("alpha")), scalar(take("beta")));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), kind_at + 1);
  }
  throw ParseError("unknown ring '" + kind + "' (expected quantum, weyl, ah or twisted)", kind_at + 1);
}

}  // namespace skew
