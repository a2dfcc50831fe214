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

// Roots and irreducibility of small polynomials in K[t] (commutative), reusing
// YPoly as the container.  Used by the criteria that look only at constant
// coefficients.

#include "skew/ypoly.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace skew {

enum class RootSearch { found, none, undecided };

template <class K>
struct RootResult {
  RootSearch status;
  std::optional<K> root;
};

namespace detail {

template <class K>
YPoly<K> make_monic(const YPoly<K>& g) {
  return g.leading_coeff().inv() * g;
}

template <class K>
YPoly<K> poly_gcd(YPoly<K> a, YPoly<K> b) {
  while (!b.is_zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : make_monic(a);
}

template <class K>
YPoly<K> powmod(YPoly<K> base, std::uint64_t e, const YPoly<K>& mod) {
  YPoly<K> result = divrem(YPoly<K>::one(mod.field()), mod).second;
  base = divrem(base, mod).second;
  while (e > 0) {
    if (e & 1U) result = divrem(result * base, mod).second;
    base = divrem(base * base, mod).second;
    e >>= 1U;
  }
  return result;
}

// Splits a monic squarefree product of distinct linear factors over F_p (p odd)
// by gcds with (x + a)^((p-1)/2) - 1 for a = 0, 1, 2, ... in order.
inline std::optional<Residue> split_for_root(const YPoly<Residue>& g) {
  const PrimeField& f = g.field();
  YPoly<Residue> cur = g;
  for (std::uint64_t a = 0; a < f.p && cur.degree().value() > 1; ++a) {
    const YPoly<Residue> shift(f, {f.element(a), f.one()});
    const YPoly<Residue> w = powmod(shift, (f.p - 1) / 2, cur) - YPoly<Residue>::one(f);
    const YPoly<Residue> h = poly_gcd(cur, w);
    if (!h.is_zero() && h.degree().value() >= 1 && h.degree() < cur.degree()) cur = h;
  }
  if (cur.degree() != Degree(1)) return std::nullopt;
  return -cur.constant_term();
}

}  // namespace detail

/// A root in F_p of g (deg g >= 1); exhaustive for small p, gcd-based otherwise.
inline RootResult<Residue> find_root(const YPoly<Residue>& g) {
  if (g.degree().value_or(0) < 1) throw std::invalid_argument("find_root needs a nonconstant polynomial");
  const PrimeField& f = g.field();
  if (g.constant_term().is_zero()) return {RootSearch::found, f.zero()};
  if (f.p <= (1U << 16U)) {
    for (std::uint64_t i = 0; i < f.p; ++i) {
      if (g.evaluate(f.element(i)).is_zero()) return {RootSearch::found, f.element(i)};
    }
    return {RootSearch::none, std::nullopt};
  }
  const YPoly<Residue> x = YPoly<Residue>::y(f);
  const YPoly<Residue> monic = detail::make_monic(g);
  const YPoly<Residue> linear_part = detail::poly_gcd(monic, detail::powmod(x, f.p, monic) - x);
  if (linear_part.degree() == Degree(0)) return {RootSearch::none, std::nullopt};
  if (auto r = detail::split_for_root(linear_part)) return {RootSearch::found, *r};
  return {RootSearch::undecided, std::nullopt};
}

namespace detail {

// Divisors of |n| up to a trial-division limit; nullopt if n is too large to factor.
inline std::optional<std::vector<BigInt>> positive_divisors(BigInt n, unsigned long long limit = 1000000ULL) {
  if (n < 0) n = -n;
  std::vector<std::pair<BigInt, unsigned>> fac;
  for (unsigned long long p = 2; BigInt(p) * p <= n; ++p) {
    if (p > limit) return std::nullopt;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) fac.emplace_back(BigInt(p), e);
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : fac) {
    const std::size_t sz = divs.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace detail

/// A rational root of g by the rational root test after clearing denominators.
inline RootResult<Rational> find_root(const YPoly<Rational>& g) {
  if (g.degree().value_or(0) < 1) throw std::invalid_argument("find_root needs a nonconstant polynomial");
  if (g.constant_term().is_zero()) return {RootSearch::found, Rational(0)};
  const YPoly<Rational> monic = detail::make_monic(g);
  const auto cs = monic.coeffs();
  const int n = monic.degree().value();
  BigInt L = 1;
  for (const auto& c : cs) L = boost::multiprecision::lcm(L, c.den());
  // t = s / L turns monic into an integer monic polynomial in s; roots are integer divisors of its constant.
  const BigInt c0 = (cs[0] * Rational(boost::multiprecision::pow(L, static_cast<unsigned>(n)), 1)).num();
  auto divs = detail::positive_divisors(c0);
  if (!divs) return {RootSearch::undecided, std::nullopt};
  for (const auto& d : *divs) {
    for (int sign : {1, -1}) {
      Rational r(sign * d, L);
      if (monic.evaluate(r).is_zero()) return {RootSearch::found, r};
    }
  }
  return {RootSearch::none, std::nullopt};
}

/// Splitting of the scalar quadratic t^2 - a1 t - a0 decided by the discriminant a1^2 + 4 a0.
/// Returns the roots (r1, r2) with t^2 - a1 t - a0 = (t - r1)(t - r2), or nullopt if irreducible.
/// Requires characteristic != 2.
template <class K>
std::optional<std::pair<K, K>> split_quadratic(const K& a1, const K& a0) {
  const auto f = a1.field();
  if (f.characteristic() == 2) throw std::domain_error("discriminant test requires characteristic != 2");
  const K disc = a1 * a1 + f.from_int(4) * a0;
  const K two_inv = f.from_int(2).inv();
  if (disc.is_zero()) return std::make_pair(a1 * two_inv, a1 * two_inv);
  auto s = mth_root(disc, 2);
  if (!s) return std::nullopt;
  return std::make_pair((a1 + *s) * two_inv, (a1 - *s) * two_inv);
}

}  // namespace skew
