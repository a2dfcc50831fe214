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
 * @file bounds.hpp
 * @brief Degree bounds for factor coefficients and canonical enumeration of K[y] over F_p.
 *
 * Give y weight 1 and t weight lambda >= ring.newton_slope().  Then the
 * weighted leading form of a product is the product of the leading forms in
 * an associated graded Ore extension of K[y], which is again a domain, so the
 * weighted degree w_lambda(f) = max_i (deg a_i + lambda i) is additive.  For
 * monic f = g h with deg g = k this yields, for every coefficient g_i,
 *
 *     deg g_i <= w_lambda(f) - lambda (deg f - k + i),
 *
 * and the same for a monic left factor.  The bound is minimized over lambda.
 * The right-hand side is convex and piecewise linear in lambda, so only
 * lambda_0 and the pairwise breakpoints need checking.
 */

#include "skew/skewpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace skew {

namespace detail {

inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace detail

/// Upper bound on deg_y of coefficient `index` of any monic factor of t-degree
/// `factor_degree` (left or right) of the monic polynomial f.  A negative
/// result means that coefficient must vanish.
template <class K>
int factor_coeff_bound(const SkewPoly<K>& f, int factor_degree, int index) {
  const int m = f.degree().value();
  if (factor_degree < 1 || factor_degree > m || index < 0 || index >= factor_degree) {
    throw std::out_of_range("factor_coeff_bound: bad factor shape");
  }
  std::vector<std::pair<long long, long long>> pts;  // (j, deg a_j)
  for (int j = 0; j <= m; ++j) {
    const Degree d = f.coeffs()[static_cast<std::size_t>(j)].degree();
    if (d.is_finite()) pts.emplace_back(j, d.value());
  }
  const long long shift = m - factor_degree + index;
  const long long slope0 = f.ring().newton_slope();

  // evaluate floor(max_j (d_j + lam j) - lam*shift) at lam = num/den
  auto eval = [&](long long num, long long den) {
    long long best = std::numeric_limits<long long>::min();
    for (auto [j, d] : pts) best = std::max(best, d * den + num * j);
    return detail::floor_div(best - num * shift, den);
  };

  long long result = eval(slope0, 1);
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      const long long num = pts[a].second - pts[b].second;
      const long long den = pts[b].first - pts[a].first;
      if (num <= slope0 * den) continue;
      result = std::min(result, eval(num, den));
    }
  }
  return static_cast<int>(result);
}

/// Leading-term bound for b in N_2(b) = a_1 b + a_0 where f = t^2 - a_1 t - a_0:
/// 2 deg b must not exceed max(deg a_1 + deg b, deg a_0, deg delta(b)), so
/// deg b <= max(deg a_1, ceil(deg a_0 / 2), deg h - 1).
template <class K>
int quadratic_linear_factor_bound(const SkewPoly<K>& f) {
  if (f.degree() != Degree(2)) throw std::invalid_argument("expected a degree-2 polynomial");
  int bound = 0;
  const Degree d1 = f.coeffs()[1].degree();
  const Degree d0 = f.coeffs()[0].degree();
  if (d1.is_finite()) bound = std::max(bound, d1.value());
  if (d0.is_finite()) bound = std::max(bound, (d0.value() + 1) / 2);
  if (f.ring().delta_map().kind == DeltaKind::a_h && f.ring().h().degree().is_finite()) {
    bound = std::max(bound, f.ring().h().degree().value() - 1);
  }
  return bound;
}

/// Bounds for a brute-force factor search.
struct SearchBounds {
  int max_factor_t_degree = 0;
  int max_coeff_y_degree = 0;
  bool derived = false;  // computed from f rather than supplied by the caller
};

/// Uniform bounds covering every coefficient of every proper monic factor.
template <class K>
SearchBounds derive_search_bounds(const SkewPoly<K>& f) {
  const int m = f.degree().value();
  SearchBounds sb;
  sb.max_factor_t_degree = std::max(0, m - 1);
  sb.derived = true;
  int y = 0;
  for (int k = 1; k < m; ++k) {
    for (int i = 0; i < k; ++i) y = std::max(y, factor_coeff_bound(f, k, i));
  }
  if (m == 2) y = std::max(y, quadratic_linear_factor_bound(f));
  sb.max_coeff_y_degree = y;
  return sb;
}

/// p^count, saturating at UINT64_MAX.
inline std::uint64_t saturating_power(std::uint64_t p, long long count) {
  std::uint64_t r = 1;
  for (long long i = 0; i < count; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    r *= p;
  }
  return r;
}

/// Number of polynomials over F_p of y-degree <= bound (bound < 0 means only 0).
inline std::uint64_t ypoly_count(const PrimeField& f, int bound) { return saturating_power(f.p, std::max(bound + 1, 0)); }

/// Visits every polynomial of y-degree <= bound over F_p in canonical order:
/// coefficient vectors (b_0, ..., b_bound) in lexicographic order over residues
/// 0..p-1, lowest y-degree most significant.  Stops early when visit returns true.
template <class Visit>
bool enumerate_ypolys(const PrimeField& field, int bound, Visit&& visit) {
  const std::size_t n = static_cast<std::size_t>(std::max(bound + 1, 0));
  std::vector<std::uint64_t> digits(n, 0);
  while (true) {
    std::vector<Residue> cs;
    cs.reserve(n);
    for (auto d : digits) cs.push_back(field.element(d));
    if (visit(YPoly<Residue>(field, std::move(cs)))) return true;
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < field.p) break;
      digits[pos] = 0;
      if (pos == 0) return false;
    }
    if (n == 0) return false;
  }
}

}  // namespace skew
