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
 * @file criteria.hpp
 * @brief Irreducibility criteria and deciders for f in K[y][t; sigma, delta].
 *
 * Polynomials are written f = t^m - a_{m-1} t^{m-1} - ... - a_0, so the
 * "a_i" below are the negated left coefficients of f.  Each criterion
 * returns std::nullopt when it does not apply or does not fire.  Over F_p the
 * deciders finish with an exhaustive factor search bounded by the degree
 * bounds in bounds.hpp and are exact; over Q they are sound but incomplete.
 */

#include "skew/bounds.hpp"
#include "skew/scalar_poly.hpp"
#include "skew/verdict.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace skew {

struct DecideOptions {
  /// Largest number of candidates any single search may visit.
  std::uint64_t budget = 20'000'000;
  /// Search with bounds 2B (at least B + 1) instead of B; used to check that the bounds are not too tight.
  bool widen_bounds = false;
  /// Over Q, try factors with small integer coefficients before giving up.
  bool small_coefficient_search = true;
};

template <class K>
using MaybeVerdict = std::optional<Verdict<K>>;

namespace detail {

template <class K>
inline constexpr bool is_prime_field_v = std::is_same_v<K, Residue>;

template <class K>
YPoly<K> a_coeff(const SkewPoly<K>& f, int i) {
  return -f.coeff(static_cast<std::size_t>(i));
}

/// f = t^m - a for some a (middle coefficients vanish).
template <class K>
bool is_t_m_minus_a(const SkewPoly<K>& f) {
  if (!f.is_monic()) return false;
  const int m = f.degree().value();
  for (int i = 1; i < m; ++i) {
    if (!f.coeff(static_cast<std::size_t>(i)).is_zero()) return false;
  }
  return true;
}

template <class K>
void require_shape(const SkewPoly<K>& f, int degree, const char* op) {
  if (f.degree() != Degree(degree) || !f.is_monic()) {
    throw std::invalid_argument(std::string(op) + ": wrong shape, expected a monic polynomial of degree " +
                                std::to_string(degree));
  }
}

inline int widen(int bound, const DecideOptions& opts) {
  return opts.widen_bounds ? std::max(2 * bound, bound + 1) : bound;
}

/// Scalar polynomial in K[t] from constant terms of the coefficients of f.
template <class K>
YPoly<K> constant_terms(const SkewPoly<K>& f) {
  std::vector<K> cs;
  for (const auto& c : f.coeffs()) cs.push_back(c.constant_term());
  return YPoly<K>(f.ring().field(), std::move(cs));
}

template <class K>
Verdict<K> right_linear_witness(const SkewPoly<K>& f, const YPoly<K>& b, CriterionId id) {
  const auto g = SkewPoly<K>::linear(f.ring_ptr(), b);
  return Verdict<K>::reducible(right_divrem(f, g).quotient, g, f, id);
}

template <class K>
Verdict<K> left_linear_witness(const SkewPoly<K>& f, const YPoly<K>& b, CriterionId id) {
  const auto g = SkewPoly<K>::linear(f.ring_ptr(), b);
  return Verdict<K>::reducible(g, left_divrem(f, g).quotient, f, id);
}

/// First b in canonical order with rem(b) == 0.
template <class Rem>
std::optional<YPoly<Residue>> scan_ypolys(const PrimeField& field, int bound, std::uint64_t budget, Rem&& rem) {
  if (ypoly_count(field, bound) > budget) throw BudgetExceeded("factor search exceeds the candidate budget");
  std::optional<YPoly<Residue>> found;
  enumerate_ypolys(field, bound, [&](const YPoly<Residue>& b) {
    if (!rem(b).is_zero()) return false;
    found = b;
    return true;
  });
  return found;
}

/// Polynomials over Q with integer coefficients in [-range, range] and degree <= bound, stopping when visit is true.
template <class Visit>
bool enumerate_small_ypolys(int bound, int range, Visit&& visit) {
  const RationalField q;
  const std::size_t n = static_cast<std::size_t>(std::max(bound + 1, 0));
  std::vector<int> digits(n, -range);
  if (n == 0) return visit(YPoly<Rational>(q));
  while (true) {
    std::vector<Rational> cs;
    for (int d : digits) cs.emplace_back(d);
    if (visit(YPoly<Rational>(q, std::move(cs)))) return true;
    std::size_t pos = n;
    while (true) {
      if (pos == 0) return false;
      --pos;
      if (++digits[pos] <= range) break;
      digits[pos] = -range;
    }
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Remainder on right division by a monic quadratic.

/// Right remainder r1 t + r0 of f modulo t^2 - c t - d, from t^i = u_i t + v_i with
/// u_{i+1} = sigma(u_i) c + delta(u_i) + sigma(v_i) and v_{i+1} = sigma(u_i) d + delta(v_i).
template <class K>
std::pair<YPoly<K>, YPoly<K>> quadratic_right_remainder(const SkewPoly<K>& f, const YPoly<K>& c, const YPoly<K>& d) {
  const auto& ring = f.ring();
  YPoly<K> u(ring.field());
  YPoly<K> v = YPoly<K>::one(ring.field());
  YPoly<K> r1(ring.field());
  YPoly<K> r0(ring.field());
  for (const auto& fi : f.coeffs()) {
    r1 += fi * u;
    r0 += fi * v;
    const YPoly<K> su = ring.sigma(u);
    YPoly<K> nu = su * c + ring.delta(u) + ring.sigma(v);
    YPoly<K> nv = su * d + ring.delta(v);
    u = std::move(nu);
    v = std::move(nv);
  }
  return {std::move(r1), std::move(r0)};
}

namespace detail {

// All x in F_p^n with sum_j x_j cols[j] = rhs, in lexicographic order of (x_0, ..., x_{n-1}).
inline std::vector<std::vector<Residue>> solve_linear_fp(const PrimeField& field, const std::vector<YPoly<Residue>>& cols,
                                                         const YPoly<Residue>& rhs, std::uint64_t budget) {
  const std::size_t n = cols.size();
  std::size_t rows = rhs.coeffs().size();
  for (const auto& c : cols) rows = std::max(rows, c.coeffs().size());
  // augmented matrix, row-major
  std::vector<std::vector<Residue>> a(rows, std::vector<Residue>(n + 1, field.zero()));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < rows; ++i) a[i][j] = cols[j].coeff(i);
  }
  for (std::size_t i = 0; i < rows; ++i) a[i][n] = rhs.coeff(i);

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < rows; ++j) {
    std::size_t piv = r;
    while (piv < rows && a[piv][j].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const Residue inv = a[r][j].inv();
    for (auto& x : a[r]) x = x * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][j].is_zero()) continue;
      const Residue factor = a[i][j];
      for (std::size_t k = j; k <= n; ++k) a[i][k] -= factor * a[r][k];
    }
    pivot_cols.push_back(j);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!a[i][n].is_zero()) return {};
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0, k = 0; j < n; ++j) {
    if (k < pivot_cols.size() && pivot_cols[k] == j) {
      ++k;
    } else {
      free_cols.push_back(j);
    }
  }
  if (saturating_power(field.p, static_cast<long long>(free_cols.size())) > budget) {
    throw BudgetExceeded("quadratic factor search exceeds the candidate budget");
  }
  std::vector<std::vector<Residue>> out;
  std::vector<std::uint64_t> digits(free_cols.size(), 0);
  while (true) {
    std::vector<Residue> x(n, field.zero());
    for (std::size_t k = 0; k < free_cols.size(); ++k) x[free_cols[k]] = field.element(digits[k]);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
      Residue val = a[k][n];
      for (std::size_t fc : free_cols) val -= a[k][fc] * x[fc];
      x[pivot_cols[k]] = val;
    }
    out.push_back(std::move(x));
    std::size_t pos = digits.size();
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < field.p) {
        done = false;
        break;
      }
      digits[pos] = 0;
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r2) {
    return std::lexicographical_compare(l.begin(), l.end(), r2.begin(), r2.end(),
                                        [](const Residue& u, const Residue& w) { return u.value() < w.value(); });
  });
  return out;
}

}  // namespace detail

/// First monic right factor t^2 - c t - d of a degree-4 monic f over F_p, scanning c in
/// canonical order and solving r1 = 0 (linear in d) for each c before testing r0 = 0.
inline std::optional<SkewPoly<Residue>> scan_quadratic_right(const SkewPoly<Residue>& f, int c_bound, int d_bound,
                                                             std::uint64_t budget) {
  detail::require_shape(f, 4, "scan_quadratic_right");
  const PrimeField& field = f.ring().field();
  const std::size_t nd = static_cast<std::size_t>(std::max(d_bound + 1, 0));
  const std::uint64_t per_c = nd + 2;
  const std::uint64_t count = ypoly_count(field, c_bound);
  if (count > budget / per_c) throw BudgetExceeded("quadratic factor search exceeds the candidate budget");
  const YPoly<Residue> zero(field);
  std::optional<SkewPoly<Residue>> found;
  enumerate_ypolys(field, c_bound, [&](const YPoly<Residue>& c) {
    const YPoly<Residue> base = quadratic_right_remainder(f, c, zero).first;
    std::vector<YPoly<Residue>> cols;
    for (std::size_t j = 0; j < nd; ++j) {
      cols.push_back(quadratic_right_remainder(f, c, YPoly<Residue>::monomial(field.one(), static_cast<int>(j))).first -
                     base);
    }
    for (const auto& x : detail::solve_linear_fp(field, cols, -base, budget)) {
      const YPoly<Residue> d(field, x);
      auto [r1, r0] = quadratic_right_remainder(f, c, d);
      if (r1.is_zero() && r0.is_zero()) {
        found = SkewPoly<Residue>(f.ring_ptr(), {-d, -c, YPoly<Residue>::one(field)});
        return true;
      }
    }
    return false;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Sufficient criteria.

/// t^2 - a in a twisted ring: parity of deg a and square classes of its coefficients.
template <class K>
MaybeVerdict<K> crit_t2_minus_a(const SkewPoly<K>& f) {
  const auto& ring = f.ring();
  if (!ring.is_twisted() || f.degree() != Degree(2) || !detail::is_t_m_minus_a(f)) return std::nullopt;
  const YPoly<K> a = detail::a_coeff(f, 0);
  if (a.is_zero()) return std::nullopt;
  const int s = a.degree().value();
  const K lead = a.leading_coeff();
  const K one = ring.field().one();
  if (s % 2 == 1) return Verdict<K>::irreducible(CriterionId::t2a_odd_degree);
  if (s == 0 && !is_mth_power(lead, 2)) return Verdict<K>::irreducible(CriterionId::t2a_constant_nonsquare);
  if (ring.alpha() == one) {
    if (!is_mth_power(lead, 2)) return Verdict<K>::irreducible(CriterionId::t2a_leading_nonsquare);
  } else if (!in_power_alpha_class(lead, 2, ring.alpha())) {
    return Verdict<K>::irreducible(CriterionId::t2a_leading_alpha_class);
  }
  const K a0 = a.constant_term();
  if (ring.beta().is_zero() && !a0.is_zero() && !is_mth_power(a0, 2)) {
    return Verdict<K>::irreducible(CriterionId::t2a_constant_term_nonsquare);
  }
  return std::nullopt;
}

/// t^3 - a in a twisted ring: deg a mod 3 and cube classes of its coefficients.
template <class K>
MaybeVerdict<K> crit_t3_minus_a(const SkewPoly<K>& f) {
  const auto& ring = f.ring();
  if (!ring.is_twisted() || f.degree() != Degree(3) || !detail::is_t_m_minus_a(f)) return std::nullopt;
  const YPoly<K> a = detail::a_coeff(f, 0);
  if (a.is_zero()) return std::nullopt;
  const int s = a.degree().value();
  const K lead = a.leading_coeff();
  const K one = ring.field().one();
  if (s % 3 != 0) return Verdict<K>::irreducible(CriterionId::t3a_degree_mod3);
  if (s == 0 && !is_mth_power(lead, 3)) return Verdict<K>::irreducible(CriterionId::t3a_constant_noncube);
  if (ring.alpha() == one) {
    if (!is_mth_power(lead, 3)) return Verdict<K>::irreducible(CriterionId::t3a_leading_noncube);
  } else if (!in_power_alpha_class(lead, 3, ring.alpha())) {
    return Verdict<K>::irreducible(CriterionId::t3a_leading_alpha_class);
  }
  const K a0 = a.constant_term();
  if (ring.beta().is_zero() && !a0.is_zero() && !is_mth_power(a0, 3)) {
    return Verdict<K>::irreducible(CriterionId::t3a_constant_term_noncube);
  }
  return std::nullopt;
}

/// True iff the tests for t^m - a with m prime may be used: sigma-twisted ring and a
/// primitive m-th root of unity in K (which forces char K != m).
template <class K>
bool tm_minus_a_hypothesis(const RingSpec<K>& ring, unsigned m) {
  return ring.is_twisted() && has_primitive_root_of_unity(ring.field(), m) && ring.field().characteristic() != m;
}

/// t^m - a, m prime, under tm_minus_a_hypothesis.  The constant-term test fires when
/// a_0 != 0 and a_0 is not an m-th power.
template <class K>
MaybeVerdict<K> crit_tm_minus_a(const SkewPoly<K>& f, unsigned m) {
  const auto& ring = f.ring();
  if (f.degree() != Degree(static_cast<int>(m)) || !detail::is_t_m_minus_a(f)) return std::nullopt;
  if (!tm_minus_a_hypothesis(ring, m)) return std::nullopt;
  const YPoly<K> a = detail::a_coeff(f, 0);
  if (a.is_zero()) return std::nullopt;
  const int s = a.degree().value();
  const K lead = a.leading_coeff();
  if (s % static_cast<int>(m) != 0) return Verdict<K>::irreducible(CriterionId::tma_degree);
  if (s == 0 && !is_mth_power(lead, m)) return Verdict<K>::irreducible(CriterionId::tma_constant);
  if (!in_power_alpha_class(lead, m, ring.alpha())) return Verdict<K>::irreducible(CriterionId::tma_leading);
  const K a0 = a.constant_term();
  if (ring.beta().is_zero() && !a0.is_zero() && !is_mth_power(a0, m)) {
    return Verdict<K>::irreducible(CriterionId::tma_constant_term);
  }
  return std::nullopt;
}

/// Quantum plane, degree 2: a_0 != 0 and deg a_1 > deg a_0.
template <class K>
MaybeVerdict<K> crit_quantum_deg2_degree(const SkewPoly<K>& f) {
  if (f.ring().ring_class() != RingClass::quantum_plane || f.degree() != Degree(2) || !f.is_monic()) return std::nullopt;
  const YPoly<K> a1 = detail::a_coeff(f, 1);
  const YPoly<K> a0 = detail::a_coeff(f, 0);
  if (a0.is_zero() || !(a1.degree() > a0.degree())) return std::nullopt;
  return Verdict<K>::irreducible(CriterionId::quantum_deg2_degree);
}

/// Quantum plane, degree 2: the quadratic of constant terms is irreducible in K[t].
template <class K>
MaybeVerdict<K> crit_quantum_deg2_constants(const SkewPoly<K>& f) {
  if (f.ring().ring_class() != RingClass::quantum_plane || f.degree() != Degree(2) || !f.is_monic()) return std::nullopt;
  if (f.ring().field().characteristic() == 2) return std::nullopt;
  if (split_quadratic(detail::a_coeff(f, 1).constant_term(), detail::a_coeff(f, 0).constant_term())) return std::nullopt;
  return Verdict<K>::irreducible(CriterionId::quantum_deg2_constants);
}

/// Quantum plane, degree 3: the cubic of constant terms is irreducible in K[t].
template <class K>
MaybeVerdict<K> crit_quantum_deg3_constants(const SkewPoly<K>& f) {
  if (f.ring().ring_class() != RingClass::quantum_plane || f.degree() != Degree(3) || !f.is_monic()) return std::nullopt;
  if (find_root(detail::constant_terms(f)).status != RootSearch::none) return std::nullopt;
  return Verdict<K>::irreducible(CriterionId::quantum_deg3_constants);
}

/// f in K[t] of degree 2 in the quantum plane or the quantized Weyl algebra: exactly
/// irreducible iff a_1^2 + 4 a_0 is not a square; otherwise the scalar roots factor f.
template <class K>
MaybeVerdict<K> crit_scalar_deg2(const SkewPoly<K>& f) {
  const auto cls = f.ring().ring_class();
  if (cls != RingClass::quantum_plane && cls != RingClass::quantized_weyl) return std::nullopt;
  if (f.degree() != Degree(2) || !f.is_monic() || !f.has_scalar_coeffs()) return std::nullopt;
  if (f.ring().field().characteristic() == 2) return std::nullopt;
  const K a1 = detail::a_coeff(f, 1).constant_term();
  const K a0 = detail::a_coeff(f, 0).constant_term();
  if (cls == RingClass::quantized_weyl && a0.is_zero()) return std::nullopt;
  const CriterionId id = cls == RingClass::quantum_plane ? CriterionId::quantum_scalar_deg2 : CriterionId::weyl_scalar_deg2;
  auto roots = split_quadratic(a1, a0);
  if (!roots) return Verdict<K>::irreducible(id);
  const auto left = SkewPoly<K>::linear(f.ring_ptr(), YPoly<K>::constant(roots->second));
  const auto right = SkewPoly<K>::linear(f.ring_ptr(), YPoly<K>::constant(roots->first));
  return Verdict<K>::reducible(left, right, f, id);
}

/// f in K[t] of degree 3 in the quantum plane: irreducible iff irreducible in K[t].
template <class K>
MaybeVerdict<K> crit_quantum_scalar_deg3(const SkewPoly<K>& f) {
  if (f.ring().ring_class() != RingClass::quantum_plane || f.degree() != Degree(3) || !f.is_monic() ||
      !f.has_scalar_coeffs()) {
    return std::nullopt;
  }
  const auto r = find_root(detail::constant_terms(f));
  if (r.status == RootSearch::none) return Verdict<K>::irreducible(CriterionId::quantum_scalar_deg3);
  if (r.status == RootSearch::undecided) return std::nullopt;
  return detail::right_linear_witness(f, YPoly<K>::constant(*r.root), CriterionId::quantum_scalar_deg3);
}

/// Quantized Weyl algebra, degree 2: a_0 != 0, 2 deg a_1 < deg a_0 and deg a_0 odd.
template <class K>
MaybeVerdict<K> crit_weyl_deg2_degree(const SkewPoly<K>& f) {
  if (f.ring().ring_class() != RingClass::quantized_weyl || f.degree() != Degree(2) || !f.is_monic()) return std::nullopt;
  const YPoly<K> a1 = detail::a_coeff(f, 1);
  const YPoly<K> a0 = detail::a_coeff(f, 0);
  if (a0.is_zero()) return std::nullopt;
  const int d0 = a0.degree().value();
  if (d0 % 2 == 0) return std::nullopt;
  if (a1.degree().is_finite() && 2 * a1.degree().value() >= d0) return std::nullopt;
  return Verdict<K>::irreducible(CriterionId::weyl_deg2_degree);
}

/// A_h, degree 2: a_0 != 0, deg a_0 odd and deg a_0 > 2 max(deg a_1, deg h - 1).
template <class K>
MaybeVerdict<K> crit_ah_deg2_degree(const SkewPoly<K>& f) {
  if (f.ring().ring_class() != RingClass::a_h || f.degree() != Degree(2) || !f.is_monic()) return std::nullopt;
  const YPoly<K> a1 = detail::a_coeff(f, 1);
  const YPoly<K> a0 = detail::a_coeff(f, 0);
  if (a0.is_zero()) return std::nullopt;
  const int d0 = a0.degree().value();
  if (d0 % 2 == 0) return std::nullopt;
  const Degree dh = f.ring().h().degree();
  int m = -1;  // stands for -infinity: every finite candidate below is >= 0
  if (a1.degree().is_finite()) m = std::max(m, a1.degree().value());
  if (dh.is_finite() && dh.value() >= 1) m = std::max(m, dh.value() - 1);
  if (m >= 0 && d0 <= 2 * m) return std::nullopt;
  return Verdict<K>::irreducible(CriterionId::ah_deg2_degree);
}

/// A_h with h(0) = 0, degree 2: the quadratic of constant terms is irreducible in K[t].
template <class K>
MaybeVerdict<K> crit_ah_deg2_constants(const SkewPoly<K>& f) {
  if (f.ring().ring_class() != RingClass::a_h || f.degree() != Degree(2) || !f.is_monic()) return std::nullopt;
  if (!f.ring().h().constant_term().is_zero() || f.ring().field().characteristic() == 2) return std::nullopt;
  if (split_quadratic(detail::a_coeff(f, 1).constant_term(), detail::a_coeff(f, 0).constant_term())) return std::nullopt;
  return Verdict<K>::irreducible(CriterionId::ah_deg2_constants);
}

/// A_h, f = t^2 - a with deg a odd, and deg a >= 2 deg h - 2 when deg h >= 2.
template <class K>
MaybeVerdict<K> crit_ah_t2_minus_a(const SkewPoly<K>& f) {
  if (f.ring().ring_class() != RingClass::a_h || f.degree() != Degree(2) || !detail::is_t_m_minus_a(f)) return std::nullopt;
  const YPoly<K> a = detail::a_coeff(f, 0);
  if (a.is_zero() || a.degree().value() % 2 == 0) return std::nullopt;
  const Degree dh = f.ring().h().degree();
  if (!dh.is_finite() || dh.value() <= 1) return Verdict<K>::irreducible(CriterionId::ah_t2a_small_h);
  if (a.degree().value() >= 2 * dh.value() - 2) return Verdict<K>::irreducible(CriterionId::ah_t2a_large_h);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Searches.

namespace detail {

enum class Side { right, left };

/// Linear factor search on one side.  Over F_p it is exhaustive up to the bound; over Q
/// it tries small integer coefficients only.  A found factor is returned as a verdict.
template <class K>
MaybeVerdict<K> linear_factor_search(const SkewPoly<K>& f, Side side, int bound, CriterionId id,
                                     const DecideOptions& opts) {
  auto rem = [&](const YPoly<K>& b) { return side == Side::right ? right_rem_linear(f, b) : left_rem_linear(f, b); };
  std::optional<YPoly<K>> found;
  if constexpr (is_prime_field_v<K>) {
    found = scan_ypolys(f.ring().field(), bound, opts.budget, rem);
  } else {
    if (!opts.small_coefficient_search) return std::nullopt;
    id = CriterionId::small_coefficient_search;
    enumerate_small_ypolys(std::min(bound, 2), 2, [&](const YPoly<K>& b) {
      if (!rem(b).is_zero()) return false;
      found = b;
      return true;
    });
  }
  if (!found) return std::nullopt;
  return side == Side::right ? right_linear_witness(f, *found, id) : left_linear_witness(f, *found, id);
}

template <class K>
Verdict<K> exhausted(CriterionId scan_id) {
  if constexpr (is_prime_field_v<K>) {
    return Verdict<K>::irreducible(scan_id);
  } else {
    return Verdict<K>::unknown("no criterion applies and no small factor was found");
  }
}

template <class K>
Verdict<K> with_budget(const std::function<Verdict<K>()>& body) {
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    return Verdict<K>::unknown(e.what());
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Deciders.  Each expects a monic f of the stated degree.

namespace detail {

template <class K>
Verdict<K> deg2_core(const SkewPoly<K>& f, const DecideOptions& opts) {
  const auto& ring = f.ring();
  const auto cls = ring.ring_class();
  std::vector<MaybeVerdict<K> (*)(const SkewPoly<K>&)> tests;
  CriterionId scan_id = CriterionId::twisted_deg2_scan;
  switch (cls) {
    case RingClass::quantum_plane:
    case RingClass::twisted:
      tests = {&crit_t2_minus_a<K>, &crit_quantum_deg2_degree<K>, &crit_scalar_deg2<K>, &crit_quantum_deg2_constants<K>};
      break;
    case RingClass::quantized_weyl:
      tests = {&crit_weyl_deg2_degree<K>, &crit_scalar_deg2<K>};
      scan_id = CriterionId::derivation_deg2_scan;
      break;
    case RingClass::a_h:
      tests = {&crit_ah_t2_minus_a<K>, &crit_ah_deg2_degree<K>, &crit_ah_deg2_constants<K>};
      scan_id = CriterionId::ah_deg2_scan;
      break;
  }
  for (auto* test : tests) {
    if (auto v = test(f)) return *v;
  }
  return with_budget<K>([&]() -> Verdict<K> {
    const int bound = widen(quadratic_linear_factor_bound(f), opts);
    if (auto v = linear_factor_search(f, Side::right, bound, scan_id, opts)) return *v;
    return exhausted<K>(scan_id);
  });
}

template <class K>
Verdict<K> deg3_core(const SkewPoly<K>& f, const DecideOptions& opts) {
  const auto& ring = f.ring();
  CriterionId scan_id = CriterionId::derivation_deg3_scan;
  if (ring.is_twisted()) {
    scan_id = is_t_m_minus_a(f) ? CriterionId::twisted_t3a_scan : CriterionId::twisted_deg3_scan;
    for (auto* test : {&crit_t3_minus_a<K>, &crit_quantum_scalar_deg3<K>, &crit_quantum_deg3_constants<K>}) {
      if (auto v = test(f)) return *v;
    }
  }
  return with_budget<K>([&]() -> Verdict<K> {
    const int bound = widen(factor_coeff_bound(f, 1, 0), opts);
    if (auto v = linear_factor_search(f, Side::right, bound, scan_id, opts)) return *v;
    if (auto v = linear_factor_search(f, Side::left, bound, scan_id, opts)) return *v;
    return exhausted<K>(scan_id);
  });
}

template <class K>
Verdict<K> deg4_core(const SkewPoly<K>& f, const DecideOptions& opts) {
  CriterionId scan_id = CriterionId::derivation_deg4_scan;
  if (f.ring().is_twisted()) scan_id = is_t_m_minus_a(f) ? CriterionId::t4a_scan : CriterionId::twisted_deg4_scan;
  return with_budget<K>([&]() -> Verdict<K> {
    const int bound = widen(factor_coeff_bound(f, 1, 0), opts);
    if (auto v = linear_factor_search(f, Side::right, bound, scan_id, opts)) return *v;
    if (auto v = linear_factor_search(f, Side::left, bound, scan_id, opts)) return *v;
    if constexpr (is_prime_field_v<K>) {
      const int c_bound = widen(factor_coeff_bound(f, 2, 1), opts);
      const int d_bound = widen(factor_coeff_bound(f, 2, 0), opts);
      if (auto g = scan_quadratic_right(f, c_bound, d_bound, opts.budget)) {
        return Verdict<K>::reducible(right_divrem(f, *g).quotient, *g, f, scan_id);
      }
    }
    return exhausted<K>(scan_id);
  });
}

}  // namespace detail

/// Degree 2 in a twisted ring (delta = 0).
template <class K>
Verdict<K> decide_deg2_twisted(const SkewPoly<K>& f, const DecideOptions& opts = {}) {
  detail::require_shape(f, 2, "decide_deg2_twisted");
  if (!f.ring().is_twisted()) throw std::invalid_argument("decide_deg2_twisted: requires delta = 0");
  return detail::deg2_core(f, opts);
}

/// Degree 2 in any supported ring.
template <class K>
Verdict<K> decide_deg2_general(const SkewPoly<K>& f, const DecideOptions& opts = {}) {
  detail::require_shape(f, 2, "decide_deg2_general");
  return detail::deg2_core(f, opts);
}

/// Degree 3 in a twisted ring (delta = 0).
template <class K>
Verdict<K> decide_deg3_twisted(const SkewPoly<K>& f, const DecideOptions& opts = {}) {
  detail::require_shape(f, 3, "decide_deg3_twisted");
  if (!f.ring().is_twisted()) throw std::invalid_argument("decide_deg3_twisted: requires delta = 0");
  return detail::deg3_core(f, opts);
}

/// Degree 3 in any supported ring.
template <class K>
Verdict<K> decide_deg3_general(const SkewPoly<K>& f, const DecideOptions& opts = {}) {
  detail::require_shape(f, 3, "decide_deg3_general");
  return detail::deg3_core(f, opts);
}

/// Degree 4 in a twisted ring (delta = 0).
template <class K>
Verdict<K> decide_deg4_twisted(const SkewPoly<K>& f, const DecideOptions& opts = {}) {
  detail::require_shape(f, 4, "decide_deg4_twisted");
  if (!f.ring().is_twisted()) throw std::invalid_argument("decide_deg4_twisted: requires delta = 0");
  return detail::deg4_core(f, opts);
}

/// Degree 4 in any supported ring; the same three searches with delta included.
template <class K>
Verdict<K> decide_deg4_general(const SkewPoly<K>& f, const DecideOptions& opts = {}) {
  detail::require_shape(f, 4, "decide_deg4_general");
  return detail::deg4_core(f, opts);
}

/// Degree 2 in A_h.
template <class K>
Verdict<K> decide_Ah_deg2(const SkewPoly<K>& f, const DecideOptions& opts = {}) {
  detail::require_shape(f, 2, "decide_Ah_deg2");
  if (f.ring().ring_class() != RingClass::a_h) throw std::invalid_argument("decide_Ah_deg2: ring is not A_h");
  return detail::deg2_core(f, opts);
}

/// Degree conditions for t^2 - a_1 t - a_0 in the quantum plane and the quantized Weyl algebra.
template <class K>
Verdict<K> decide_prop_I(const SkewPoly<K>& f) {
  detail::require_shape(f, 2, "decide_prop_I");
  const auto cls = f.ring().ring_class();
  MaybeVerdict<K> v;
  if (cls == RingClass::quantum_plane) {
    v = crit_quantum_deg2_degree(f);
  } else if (cls == RingClass::quantized_weyl) {
    v = crit_weyl_deg2_degree(f);
  } else {
    throw std::invalid_argument("decide_prop_I: requires the quantum plane or the quantized Weyl algebra");
  }
  return v ? *v : Verdict<K>::unknown("degree condition does not hold");
}

/// Tests that look only at scalar coefficients or at constant terms.
template <class K>
Verdict<K> decide_deg2_deg3_scalar(const SkewPoly<K>& f) {
  if (f.ring().field().characteristic() == 2) {
    throw std::domain_error("decide_deg2_deg3_scalar: characteristic 2 is not supported");
  }
  if (!f.is_monic() || (f.degree() != Degree(2) && f.degree() != Degree(3))) {
    throw std::invalid_argument("decide_deg2_deg3_scalar: wrong shape, expected a monic polynomial of degree 2 or 3");
  }
  const auto cls = f.ring().ring_class();
  std::vector<MaybeVerdict<K> (*)(const SkewPoly<K>&)> tests;
  if (f.degree() == Degree(2)) {
    if (cls == RingClass::quantum_plane) tests = {&crit_scalar_deg2<K>, &crit_quantum_deg2_constants<K>};
    if (cls == RingClass::quantized_weyl) tests = {&crit_scalar_deg2<K>};
    if (cls == RingClass::a_h) tests = {&crit_ah_deg2_constants<K>};
  } else if (cls == RingClass::quantum_plane) {
    tests = {&crit_quantum_scalar_deg3<K>, &crit_quantum_deg3_constants<K>};
  }
  for (auto* test : tests) {
    if (auto v = test(f)) return *v;
  }
  return Verdict<K>::unknown("criterion does not apply");
}

/// f = t^m - a with m prime.
template <class K>
Verdict<K> decide_tm_minus_a(const SkewPoly<K>& f, unsigned m, const DecideOptions& opts = {}) {
  if (!detail::is_prime_u64(m)) throw std::invalid_argument("decide_tm_minus_a: m must be prime");
  if (f.degree() != Degree(static_cast<int>(m)) || !detail::is_t_m_minus_a(f)) {
    throw std::invalid_argument("decide_tm_minus_a: wrong shape, expected t^m - a");
  }
  const auto& ring = f.ring();
  if (ring.is_twisted()) {
    if (m == 2) {
      if (auto v = crit_t2_minus_a(f)) return *v;
    } else if (m == 3) {
      if (auto v = crit_t3_minus_a(f)) return *v;
    }
  }
  const bool hypothesis = tm_minus_a_hypothesis(ring, m);
  if (hypothesis) {
    if (auto v = crit_tm_minus_a(f, m)) return *v;
  }
  if (m == 2) return detail::deg2_core(f, opts);
  if (m == 3) return detail::deg3_core(f, opts);
  if (!hypothesis) return Verdict<K>::unknown("hypothesis: no primitive m-th root of unity in K, or delta != 0");
  return Verdict<K>::unknown("no criterion applies");
}

/// Decides irreducibility of f, first normalizing by a constant leading coefficient.
template <class K>
Verdict<K> decide(const SkewPoly<K>& f, const DecideOptions& opts = {}) {
  if (f.degree().value_or(0) < 1) throw std::invalid_argument("decide: degree-0 input is neither reducible nor irreducible");
  const YPoly<K>& lead = f.leading_coeff();
  if (!lead.is_constant()) return Verdict<K>::unknown("non-monic with non-unit leading coefficient");
  const K u = lead.constant_term();
  const SkewPoly<K> g = f.left_scale(YPoly<K>::constant(u.inv()));
  const int m = g.degree().value();

  Verdict<K> v = Verdict<K>::unknown("degree >= 5 outside the t^m - a family");
  if (m == 1) {
    v = Verdict<K>::irreducible(CriterionId::degree_one);
  } else if (m == 2) {
    v = detail::deg2_core(g, opts);
  } else if (m == 3) {
    v = detail::deg3_core(g, opts);
  } else if (m == 4) {
    v = detail::deg4_core(g, opts);
  } else if (detail::is_t_m_minus_a(g) && detail::is_prime_u64(static_cast<std::uint64_t>(m))) {
    v = decide_tm_minus_a(g, static_cast<unsigned>(m), opts);
  }
  if (!v.is_reducible() || u == f.ring().field().one()) return v;
  return Verdict<K>::reducible(v.left().left_scale(YPoly<K>::constant(u)), v.right(), f, *v.criterion());
}

}  // namespace skew
