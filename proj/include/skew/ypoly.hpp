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
 * @file ypoly.hpp
 * @brief Dense univariate polynomials K[y], the coefficient domain of every skew ring here.
 */

#include "skew/field.hpp"

#include <climits>
#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skew {

/// Polynomial degree with a distinguished minus infinity for the zero polynomial.
class Degree {
 public:
  constexpr Degree(int d) : v_(d) {  // NOLINT(google-explicit-constructor)
    if (d < 0) throw std::invalid_argument("finite degree must be nonnegative");
  }
  static constexpr Degree minus_infinity() { return Degree(); }

  [[nodiscard]] constexpr bool is_minus_infinity() const { return v_ == kNegInf; }
  [[nodiscard]] constexpr bool is_finite() const { return v_ != kNegInf; }
  /// Throws std::domain_error for minus infinity.
  [[nodiscard]] int value() const {
    if (is_minus_infinity()) throw std::domain_error("degree of the zero polynomial is -infinity");
    return v_;
  }
  /// The finite value, or `fallback` for minus infinity.
  [[nodiscard]] constexpr int value_or(int fallback) const { return is_finite() ? v_ : fallback; }

  friend constexpr bool operator==(Degree, Degree) = default;
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) { return a.v_ <=> b.v_; }
  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.is_minus_infinity() || b.is_minus_infinity()) return minus_infinity();
    return Degree(a.v_ + b.v_);
  }

  [[nodiscard]] std::string to_string() const { return is_finite() ? std::to_string(v_) : "-inf"; }

 private:
  static constexpr int kNegInf = INT_MIN;
  constexpr Degree() : v_(kNegInf) {}
  int v_;
};

/// A dense polynomial sum_i c_i y^i, trailing zeros trimmed (zero is the empty list).
template <class K>
class YPoly {
 public:
  using scalar_type = K;
  using field_type = FieldOf<K>;

  explicit YPoly(field_type field) : field_(std::move(field)) {}
  YPoly(field_type field, std::vector<K> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (const K& k : c_) {
      if (!(k.field() == field_)) throw std::invalid_argument("mixed-field operands");
    }
    trim();
  }

  static YPoly constant(const K& c) { return YPoly(c.field(), {c}); }
  static YPoly monomial(const K& c, int power) {
    if (power < 0) throw std::invalid_argument("negative exponent");
    std::vector<K> cs(static_cast<std::size_t>(power) + 1, c.field().zero());
    cs.back() = c;
    return YPoly(c.field(), std::move(cs));
  }
  static YPoly y(const field_type& field) { return monomial(field.one(), 1); }
  static YPoly one(const field_type& field) { return constant(field.one()); }

  [[nodiscard]] const field_type& field() const { return field_; }
  [[nodiscard]] std::span<const K> coeffs() const { return c_; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] bool is_constant() const { return c_.size() <= 1; }
  [[nodiscard]] bool is_one() const { return c_.size() == 1 && c_[0] == field_.one(); }
  /// Exactly one nonzero term.
  [[nodiscard]] bool is_monomial() const {
    if (c_.empty()) return false;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
      if (!c_[i].is_zero()) return false;
    }
    return true;
  }
  [[nodiscard]] Degree degree() const {
    return c_.empty() ? Degree::minus_infinity() : Degree(static_cast<int>(c_.size()) - 1);
  }

  [[nodiscard]] K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  [[nodiscard]] K constant_term() const { return coeff(0); }
  [[nodiscard]] K leading_coeff() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  [[nodiscard]] K evaluate(const K& x) const {
    K acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend YPoly operator+(const YPoly& a, const YPoly& b) {
    check_field(a, b);
    const YPoly& longer = a.c_.size() >= b.c_.size() ? a : b;
    const YPoly& shorter = a.c_.size() >= b.c_.size() ? b : a;
    std::vector<K> out = longer.c_;
    for (std::size_t i = 0; i < shorter.c_.size(); ++i) out[i] += shorter.c_[i];
    return YPoly(a.field_, std::move(out), Trusted{});
  }
  friend YPoly operator-(const YPoly& a, const YPoly& b) {
    check_field(a, b);
    std::vector<K> out(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return YPoly(a.field_, std::move(out), Trusted{});
  }
  YPoly operator-() const {
    YPoly r = *this;
    for (K& k : r.c_) k = -k;
    return r;
  }
  friend YPoly operator*(const YPoly& a, const YPoly& b) {
    check_field(a, b);
    if (a.c_.empty() || b.c_.empty()) return YPoly(a.field_);
    std::vector<K> out(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return YPoly(a.field_, std::move(out), Trusted{});
  }
  friend YPoly operator*(const K& s, const YPoly& p) {
    if (!(s.field() == p.field_)) throw std::invalid_argument("mixed-field operands");
    if (s.is_zero()) return YPoly(p.field_);
    YPoly r = p;
    for (K& k : r.c_) k = s * k;
    return r;
  }
  YPoly& operator+=(const YPoly& o) { return *this = *this + o; }
  YPoly& operator-=(const YPoly& o) { return *this = *this - o; }
  YPoly& operator*=(const YPoly& o) { return *this = *this * o; }

  friend bool operator==(const YPoly& a, const YPoly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

 private:
  struct Trusted {};
  YPoly(field_type field, std::vector<K> coeffs, Trusted) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static void check_field(const YPoly& a, const YPoly& b) {
    if (!(a.field_ == b.field_)) throw std::invalid_argument("mixed-field operands");
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  field_type field_;
  std::vector<K> c_;
};

template <class K>
YPoly<K> pow(const YPoly<K>& base, unsigned e) {
  YPoly<K> result = YPoly<K>::one(base.field());
  for (unsigned i = 0; i < e; ++i) result *= base;
  return result;
}

/// p(alpha*y + beta), by Horner's rule on the affine substitution.
template <class K>
YPoly<K> compose_affine(const YPoly<K>& p, const K& alpha, const K& beta) {
  if (alpha.is_zero()) throw std::invalid_argument("compose_affine requires alpha != 0");
  const auto& f = p.field();
  const YPoly<K> lin(f, {beta, alpha});
  YPoly<K> acc(f);
  const auto cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * lin + YPoly<K>::constant(*it);
  return acc;
}

/// Formal derivative d/dy.
template <class K>
YPoly<K> derivative(const YPoly<K>& p) {
  const auto& f = p.field();
  const auto cs = p.coeffs();
  if (cs.size() <= 1) return YPoly<K>(f);
  std::vector<K> out;
  out.reserve(cs.size() - 1);
  for (std::size_t i = 1; i < cs.size(); ++i) out.push_back(f.from_int(static_cast<long long>(i)) * cs[i]);
  return YPoly<K>(f, std::move(out));
}

/// Euclidean division: p = q * quot + rem with deg rem < deg q.
template <class K>
std::pair<YPoly<K>, YPoly<K>> divrem(const YPoly<K>& p, const YPoly<K>& q) {
  if (q.is_zero()) throw std::domain_error("polynomial division by zero");
  if (!(p.field() == q.field())) throw std::invalid_argument("mixed-field operands");
  const auto& f = p.field();
  std::vector<K> rem(p.coeffs().begin(), p.coeffs().end());
  const auto qc = q.coeffs();
  const std::size_t dq = qc.size() - 1;
  if (rem.size() < qc.size()) return {YPoly<K>(f), p};
  std::vector<K> quot(rem.size() - dq, f.zero());
  const K lead_inv = qc.back().inv();
  for (std::size_t k = rem.size(); k-- > dq;) {
    const K c = rem[k] * lead_inv;
    quot[k - dq] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= dq; ++j) rem[k - dq + j] -= c * qc[j];
  }
  rem.resize(dq, f.zero());
  return {YPoly<K>(f, std::move(quot)), YPoly<K>(f, std::move(rem))};
}

}  // namespace skew
