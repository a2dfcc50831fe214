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
 * @file skewpoly.hpp
 * @brief Skew polynomials sum_i a_i t^i in K[y][t; sigma, delta].
 *
 * Coefficients are written on the left.  Multiplication follows
 * t a = sigma(a) t + delta(a).  Two independent product routines exist:
 * skew_mul_rewrite pushes t through coefficients one step at a time, and
 * skew_mul_delta expands monomials with the operators Delta_{n,j}.  They are
 * kept side by side so each can check the other.
 *
 * For linear factors, the remainder of f on right division by (t - b) is
 * sum_i f_i N_i(b) and on left division it is sum_i M_i(b) f'_i, where f'_i
 * are the right coefficients of f (see RightForm).
 */

#include "skew/ring.hpp"

#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace skew {

template <class K>
class SkewPoly {
 public:
  using scalar_type = K;

  SkewPoly(RingPtr<K> ring, std::vector<YPoly<K>> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
    if (!ring_) throw std::invalid_argument("skew polynomial without a ring");
    for (const auto& a : c_) {
      if (!(a.field() == ring_->field())) throw std::invalid_argument("mixed-field operands");
    }
    trim();
  }

  static SkewPoly zero(RingPtr<K> ring) { return SkewPoly(std::move(ring), {}); }
  static SkewPoly one(RingPtr<K> ring) {
    auto one = YPoly<K>::one(ring->field());
    return SkewPoly(std::move(ring), {std::move(one)});
  }
  static SkewPoly constant(RingPtr<K> ring, YPoly<K> a) { return SkewPoly(std::move(ring), {std::move(a)}); }
  /// a t^n
  static SkewPoly monomial(RingPtr<K> ring, YPoly<K> a, int n) {
    std::vector<YPoly<K>> cs(static_cast<std::size_t>(n) + 1, YPoly<K>(ring->field()));
    cs.back() = std::move(a);
    return SkewPoly(std::move(ring), std::move(cs));
  }
  static SkewPoly t(RingPtr<K> ring) {
    auto one = YPoly<K>::one(ring->field());
    return monomial(std::move(ring), std::move(one), 1);
  }
  /// t - b
  static SkewPoly linear(RingPtr<K> ring, const YPoly<K>& b) { return SkewPoly(std::move(ring), {-b, YPoly<K>::one(b.field())}); }

  [[nodiscard]] const RingSpec<K>& ring() const { return *ring_; }
  [[nodiscard]] const RingPtr<K>& ring_ptr() const { return ring_; }
  [[nodiscard]] const std::vector<YPoly<K>>& coeffs() const { return c_; }
  [[nodiscard]] YPoly<K> coeff(std::size_t i) const { return i < c_.size() ? c_[i] : YPoly<K>(ring_->field()); }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] Degree degree() const {
    return c_.empty() ? Degree::minus_infinity() : Degree(static_cast<int>(c_.size()) - 1);
  }
  [[nodiscard]] const YPoly<K>& leading_coeff() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }
  [[nodiscard]] bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  /// True iff every coefficient lies in K.
  [[nodiscard]] bool has_scalar_coeffs() const {
    for (const auto& a : c_) {
      if (!a.is_constant()) return false;
    }
    return true;
  }

  /// a * f, multiplying every left coefficient by a.
  [[nodiscard]] SkewPoly left_scale(const YPoly<K>& a) const {
    std::vector<YPoly<K>> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(a * c);
    return SkewPoly(ring_, std::move(out));
  }

  friend SkewPoly operator+(const SkewPoly& f, const SkewPoly& g) {
    check_ring(f, g);
    std::vector<YPoly<K>> out(std::max(f.c_.size(), g.c_.size()), YPoly<K>(f.ring_->field()));
    for (std::size_t i = 0; i < f.c_.size(); ++i) out[i] = f.c_[i];
    for (std::size_t i = 0; i < g.c_.size(); ++i) out[i] += g.c_[i];
    return SkewPoly(f.ring_, std::move(out));
  }
  friend SkewPoly operator-(const SkewPoly& f, const SkewPoly& g) { return f + (-g); }
  SkewPoly operator-() const {
    SkewPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  friend bool operator==(const SkewPoly& f, const SkewPoly& g) { return same_ring(f, g) && f.c_ == g.c_; }

  static bool same_ring(const SkewPoly& f, const SkewPoly& g) { return f.ring_ == g.ring_ || *f.ring_ == *g.ring_; }
  static void check_ring(const SkewPoly& f, const SkewPoly& g) {
    if (!same_ring(f, g)) throw std::invalid_argument("skew polynomials from different rings");
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  RingPtr<K> ring_;
  std::vector<YPoly<K>> c_;
};

/// t * g, one application of the commutation rule to every coefficient.
template <class K>
SkewPoly<K> mul_by_t_left(const SkewPoly<K>& g) {
  const auto& R = g.ring();
  const auto& cs = g.coeffs();
  std::vector<YPoly<K>> out(cs.size() + 1, YPoly<K>(R.field()));
  for (std::size_t j = 0; j < cs.size(); ++j) {
    out[j + 1] += R.sigma(cs[j]);
    if (!R.is_twisted()) out[j] += R.delta(cs[j]);
  }
  return SkewPoly<K>(g.ring_ptr(), std::move(out));
}

/// Product via t a = sigma(a) t + delta(a): f g = sum_i a_i (t^i g).
template <class K>
SkewPoly<K> skew_mul_rewrite(const SkewPoly<K>& f, const SkewPoly<K>& g) {
  SkewPoly<K>::check_ring(f, g);
  const auto& field = f.ring().field();
  if (f.is_zero() || g.is_zero()) return SkewPoly<K>::zero(f.ring_ptr());
  const auto& fc = f.coeffs();
  std::vector<YPoly<K>> out(fc.size() + g.coeffs().size() - 1, YPoly<K>(field));
  SkewPoly<K> shifted = g;  // t^i g
  for (std::size_t i = 0; i < fc.size(); ++i) {
    if (i > 0) shifted = mul_by_t_left(shifted);
    if (fc[i].is_zero()) continue;
    const auto& sc = shifted.coeffs();
    for (std::size_t j = 0; j < sc.size(); ++j) out[j] += fc[i] * sc[j];
  }
  return SkewPoly<K>(f.ring_ptr(), std::move(out));
}

template <class K>
SkewPoly<K> operator*(const SkewPoly<K>& f, const SkewPoly<K>& g) {
  return skew_mul_rewrite(f, g);
}

/// Row n of the Delta table applied to b: entry j is Delta_{n,j}(b), where
/// Delta_{n,j} = delta o Delta_{n-1,j} + sigma o Delta_{n-1,j-1} and
/// Delta_{0,0} = id.  Rows are built bottom-up so each (n, j) is computed once.
template <class K>
std::vector<YPoly<K>> delta_row(int n, const YPoly<K>& b, const RingSpec<K>& ring) {
  if (n < 0) throw std::invalid_argument("Delta row index must be nonnegative");
  std::vector<YPoly<K>> row{b};
  for (int level = 1; level <= n; ++level) {
    std::vector<YPoly<K>> next(static_cast<std::size_t>(level) + 1, YPoly<K>(ring.field()));
    for (int j = 0; j <= level; ++j) {
      if (j < level) next[j] += ring.delta(row[j]);
      if (j > 0) next[j] += ring.sigma(row[j - 1]);
    }
    row = std::move(next);
  }
  return row;
}

/// Delta_{n,j}(b).
template <class K>
YPoly<K> delta_nj(int n, int j, const YPoly<K>& b, const RingSpec<K>& ring) {
  if (j < 0 || j > n) throw std::out_of_range("Delta_{n,j} requires 0 <= j <= n");
  return delta_row(n, b, ring)[static_cast<std::size_t>(j)];
}

/// Product via a t^n b t^m = sum_j a Delta_{n,j}(b) t^{m+j}.
template <class K>
SkewPoly<K> skew_mul_delta(const SkewPoly<K>& f, const SkewPoly<K>& g) {
  SkewPoly<K>::check_ring(f, g);
  const auto& R = f.ring();
  if (f.is_zero() || g.is_zero()) return SkewPoly<K>::zero(f.ring_ptr());
  const auto& fc = f.coeffs();
  const auto& gc = g.coeffs();
  std::vector<YPoly<K>> out(fc.size() + gc.size() - 1, YPoly<K>(R.field()));
  for (std::size_t m = 0; m < gc.size(); ++m) {
    if (gc[m].is_zero()) continue;
    for (std::size_t n = 0; n < fc.size(); ++n) {
      if (fc[n].is_zero()) continue;
      const auto row = delta_row(static_cast<int>(n), gc[m], R);
      for (std::size_t j = 0; j <= n; ++j) out[m + j] += fc[n] * row[j];
    }
  }
  return SkewPoly<K>(f.ring_ptr(), std::move(out));
}

/// N_0(b), ..., N_count(b) with N_{i+1}(b) = sigma(N_i(b)) b + delta(N_i(b)).
template <class K>
std::vector<YPoly<K>> norms_N(int count, const YPoly<K>& b, const RingSpec<K>& ring) {
  if (count < 0) throw std::invalid_argument("norm index must be nonnegative");
  std::vector<YPoly<K>> out{YPoly<K>::one(ring.field())};
  for (int i = 0; i < count; ++i) {
    const auto& prev = out.back();
    YPoly<K> next = ring.sigma(prev) * b;
    if (!ring.is_twisted()) next += ring.delta(prev);
    out.push_back(std::move(next));
  }
  return out;
}

template <class K>
YPoly<K> norm_N(int i, const YPoly<K>& b, const RingSpec<K>& ring) {
  return norms_N(i, b, ring).back();
}

/// M_0(b), ..., M_count(b) with M_{i+1}(b) = b sigma^{-1}(M_i(b)) - delta(sigma^{-1}(M_i(b))).
template <class K>
std::vector<YPoly<K>> norms_M(int count, const YPoly<K>& b, const RingSpec<K>& ring) {
  if (count < 0) throw std::invalid_argument("norm index must be nonnegative");
  std::vector<YPoly<K>> out{YPoly<K>::one(ring.field())};
  for (int i = 0; i < count; ++i) {
    const YPoly<K> pulled = ring.sigma_inv(out.back());
    YPoly<K> next = b * pulled;
    if (!ring.is_twisted()) next -= ring.delta(pulled);
    out.push_back(std::move(next));
  }
  return out;
}

template <class K>
YPoly<K> norm_M(int i, const YPoly<K>& b, const RingSpec<K>& ring) {
  return norms_M(i, b, ring).back();
}

/// sum_i t^i c_i, coefficients on the right of the powers of t.
template <class K>
struct RightForm {
  RingPtr<K> ring;
  std::vector<YPoly<K>> coeffs;

  friend bool operator==(const RightForm& a, const RightForm& b) {
    return (a.ring == b.ring || *a.ring == *b.ring) && a.coeffs == b.coeffs;
  }
};

/// Rewrites f into right form using a t = t sigma^{-1}(a) - delta(sigma^{-1}(a)).
template <class K>
RightForm<K> to_right_form(const SkewPoly<K>& f) {
  const auto& R = f.ring();
  const auto& fc = f.coeffs();
  std::vector<YPoly<K>> out(fc.size(), YPoly<K>(R.field()));
  for (std::size_t i = 0; i < fc.size(); ++i) {
    // right form of a_i t^i, built by multiplying a_i on the right by t, i times
    std::vector<YPoly<K>> cur{fc[i]};
    for (std::size_t step = 0; step < i; ++step) {
      std::vector<YPoly<K>> next(cur.size() + 1, YPoly<K>(R.field()));
      for (std::size_t j = 0; j < cur.size(); ++j) {
        const YPoly<K> pulled = R.sigma_inv(cur[j]);
        if (!R.is_twisted()) next[j] -= R.delta(pulled);
        next[j + 1] += pulled;
      }
      cur = std::move(next);
    }
    for (std::size_t j = 0; j < cur.size(); ++j) out[j] += cur[j];
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return RightForm<K>{f.ring_ptr(), std::move(out)};
}

template <class K>
SkewPoly<K> from_right_form(const RightForm<K>& rf) {
  SkewPoly<K> acc = SkewPoly<K>::zero(rf.ring);
  SkewPoly<K> power = SkewPoly<K>::one(rf.ring);  // t^i
  for (std::size_t i = 0; i < rf.coeffs.size(); ++i) {
    if (i > 0) power = mul_by_t_left(power);
    if (!rf.coeffs[i].is_zero()) acc = acc + power * SkewPoly<K>::constant(rf.ring, rf.coeffs[i]);
  }
  return acc;
}

namespace detail {
template <class K>
void require_monic(const SkewPoly<K>& f, const char* what) {
  if (!f.is_monic()) throw std::invalid_argument(std::string(what) + " requires a monic polynomial");
}
}  // namespace detail

/// Remainder of f on right division by (t - b): sum_i f_i N_i(b).
/// With f = t^m - sum a_i t^i this is N_m(b) - sum a_i N_i(b).
template <class K>
YPoly<K> right_rem_linear(const SkewPoly<K>& f, const YPoly<K>& b) {
  detail::require_monic(f, "right_rem_linear");
  const auto& fc = f.coeffs();
  const auto N = norms_N(static_cast<int>(fc.size()) - 1, b, f.ring());
  YPoly<K> acc(f.ring().field());
  for (std::size_t i = 0; i < fc.size(); ++i) acc += fc[i] * N[i];
  return acc;
}

/// Remainder of f on left division by (t - b): sum_i M_i(b) f'_i.
template <class K>
YPoly<K> left_rem_linear(const SkewPoly<K>& f, const YPoly<K>& b) {
  detail::require_monic(f, "left_rem_linear");
  const auto rf = to_right_form(f);
  const auto M = norms_M(static_cast<int>(rf.coeffs.size()) - 1, b, f.ring());
  YPoly<K> acc(f.ring().field());
  for (std::size_t i = 0; i < rf.coeffs.size(); ++i) acc += M[i] * rf.coeffs[i];
  return acc;
}

template <class K>
struct DivRem {
  SkewPoly<K> quotient;
  SkewPoly<K> remainder;
};

/// f = quotient * g + remainder, deg remainder < deg g; g must be monic.
template <class K>
DivRem<K> right_divrem(const SkewPoly<K>& f, const SkewPoly<K>& g) {
  SkewPoly<K>::check_ring(f, g);
  detail::require_monic(g, "right_divrem");
  const auto ring = f.ring_ptr();
  const int k = g.degree().value();
  SkewPoly<K> rem = f;
  std::vector<YPoly<K>> quot(static_cast<std::size_t>(std::max(0, f.degree().value_or(-1) - k + 1)),
                             YPoly<K>(ring->field()));
  while (rem.degree().value_or(-1) >= k) {
    const int n = rem.degree().value();
    // (a t^{n-k}) g has leading term a t^n because g is monic.
    const auto term = SkewPoly<K>::monomial(ring, rem.leading_coeff(), n - k);
    quot[static_cast<std::size_t>(n - k)] = rem.leading_coeff();
    rem = rem - term * g;
  }
  return {SkewPoly<K>(ring, std::move(quot)), std::move(rem)};
}

/// f = g * quotient + remainder, deg remainder < deg g; g must be monic.
template <class K>
DivRem<K> left_divrem(const SkewPoly<K>& f, const SkewPoly<K>& g) {
  SkewPoly<K>::check_ring(f, g);
  detail::require_monic(g, "left_divrem");
  const auto ring = f.ring_ptr();
  const int k = g.degree().value();
  SkewPoly<K> rem = f;
  SkewPoly<K> quot = SkewPoly<K>::zero(ring);
  while (rem.degree().value_or(-1) >= k) {
    const int n = rem.degree().value();
    // a t^n = t^n sigma^{-n}(a) + lower terms, and g (t^{n-k} c) = t^n c + lower.
    const YPoly<K> right_lead = ring->sigma_pow(rem.leading_coeff(), -n);
    SkewPoly<K> term = SkewPoly<K>::one(ring);
    for (int i = 0; i < n - k; ++i) term = mul_by_t_left(term);
    term = term * SkewPoly<K>::constant(ring, right_lead);
    quot = quot + term;
    rem = rem - g * term;
  }
  return {std::move(quot), std::move(rem)};
}

}  // namespace skew
