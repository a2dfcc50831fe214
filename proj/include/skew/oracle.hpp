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
 * @file oracle.hpp
 * @brief Brute-force factor search over F_p, independent of the criteria.
 *
 * scan_generic tries every monic candidate factor up to the given bounds and
 * tests it with full skew division, so it shares no code path with the
 * norm-based remainders used by the deciders.
 */

#include "skew/bounds.hpp"
#include "skew/criteria.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace skew {

namespace detail {

template <class K>
void require_prime_field(const char* op) {
  if constexpr (!std::is_same_v<K, Residue>) {
    throw std::invalid_argument(std::string(op) + ": exhaustive search needs a finite field");
  }
}

// Visits all tuples of `count` polynomials of degree <= bound over F_p, with the
// concatenated coefficient vectors in lexicographic order.
template <class Visit>
bool enumerate_ypoly_tuples(const PrimeField& field, int count, int bound, Visit&& visit) {
  const std::size_t width = static_cast<std::size_t>(std::max(bound + 1, 0));
  const std::size_t n = width * static_cast<std::size_t>(count);
  std::vector<std::uint64_t> digits(n, 0);
  while (true) {
    std::vector<YPoly<Residue>> tuple;
    for (int k = 0; k < count; ++k) {
      std::vector<Residue> cs;
      for (std::size_t i = 0; i < width; ++i) cs.push_back(field.element(digits[static_cast<std::size_t>(k) * width + i]));
      tuple.emplace_back(field, std::move(cs));
    }
    if (visit(tuple)) return true;
    std::size_t pos = n;
    while (true) {
      if (pos == 0) return false;
      --pos;
      if (++digits[pos] < field.p) break;
      digits[pos] = 0;
    }
  }
}

}  // namespace detail

/// First b (canonical order, deg b <= bounds.max_coeff_y_degree) with zero right remainder by t - b.
template <class K>
std::optional<YPoly<K>> scan_linear_right(const SkewPoly<K>& f, const SearchBounds& bounds) {
  detail::require_prime_field<K>("scan_linear_right");
  if constexpr (std::is_same_v<K, Residue>) {
    return detail::scan_ypolys(f.ring().field(), bounds.max_coeff_y_degree, std::numeric_limits<std::uint64_t>::max(),
                               [&](const YPoly<K>& b) { return right_rem_linear(f, b); });
  } else {
    return std::nullopt;
  }
}

/// First b (canonical order) with zero left remainder by t - b.
template <class K>
std::optional<YPoly<K>> scan_linear_left(const SkewPoly<K>& f, const SearchBounds& bounds) {
  detail::require_prime_field<K>("scan_linear_left");
  if constexpr (std::is_same_v<K, Residue>) {
    return detail::scan_ypolys(f.ring().field(), bounds.max_coeff_y_degree, std::numeric_limits<std::uint64_t>::max(),
                               [&](const YPoly<K>& b) { return left_rem_linear(f, b); });
  } else {
    return std::nullopt;
  }
}

inline constexpr std::uint64_t kDefaultOracleGuard = 100'000'000;

/// A factorization f = left * right with both factors of positive degree, or nullopt if
/// none exists within the bounds.  For each split degree the smaller factor is enumerated
/// and tested by full skew division.  Throws BudgetExceeded beyond `guard` candidates.
template <class K>
std::optional<std::pair<SkewPoly<K>, SkewPoly<K>>> scan_generic(const SkewPoly<K>& f, const SearchBounds& bounds,
                                                                std::uint64_t guard = kDefaultOracleGuard) {
  detail::require_prime_field<K>("scan_generic");
  if constexpr (std::is_same_v<K, Residue>) {
    detail::require_monic(f, "scan_generic");
    const int m = f.degree().value();
    const auto& field = f.ring().field();
    const int max_k = std::min(m - 1, std::max(bounds.max_factor_t_degree, 0));
    std::uint64_t total = 0;
    for (int k = 1; k <= max_k; ++k) {
      const int small = std::min(k, m - k);
      const std::uint64_t c = ypoly_count(field, bounds.max_coeff_y_degree);
      const std::uint64_t n = saturating_power(c, small);
      total = (n > guard || total > guard - n) ? guard + 1 : total + n;
    }
    if (total > guard) throw BudgetExceeded("oracle search exceeds the candidate guard");

    std::optional<std::pair<SkewPoly<K>, SkewPoly<K>>> found;
    for (int k = 1; k <= max_k && !found; ++k) {
      const bool right_small = k <= m - k;  // k is the degree of the right factor
      const int small = right_small ? k : m - k;
      detail::enumerate_ypoly_tuples(field, small, bounds.max_coeff_y_degree, [&](const std::vector<YPoly<K>>& cs) {
        std::vector<YPoly<K>> gc = cs;
        gc.push_back(YPoly<K>::one(field));
        const SkewPoly<K> g(f.ring_ptr(), std::move(gc));
        if (right_small) {
          auto dr = right_divrem(f, g);
          if (!dr.remainder.is_zero()) return false;
          found.emplace(std::move(dr.quotient), g);
        } else {
          auto dr = left_divrem(f, g);
          if (!dr.remainder.is_zero()) return false;
          found.emplace(g, std::move(dr.quotient));
        }
        return true;
      });
    }
    return found;
  } else {
    return std::nullopt;
  }
}

/// Visits every monic f of t-degree `degree` over F_p whose lower coefficients have
/// y-degree <= max_y_degree, in canonical order (coefficient of t^0 most significant).
template <class Visit>
void for_each_monic(const RingPtr<Residue>& ring, int degree, int max_y_degree, Visit&& visit) {
  detail::enumerate_ypoly_tuples(ring->field(), degree, max_y_degree, [&](const std::vector<YPoly<Residue>>& cs) {
    std::vector<YPoly<Residue>> fc = cs;
    fc.push_back(YPoly<Residue>::one(ring->field()));
    visit(SkewPoly<Residue>(ring, std::move(fc)));
    return false;
  });
}

struct CampaignRecord {
  SkewPoly<Residue> f;
  Verdict<Residue> verdict;
  bool oracle_reducible;
  bool agree;
};

struct CampaignReport {
  RingPtr<Residue> ring;
  int t_degree = 0;
  int max_y_degree = 0;
  std::vector<CampaignRecord> records;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
};

/// Runs decide and the oracle on every monic f of the given shape.  An Unknown verdict
/// counts as a disagreement.
inline CampaignReport exhaustive_campaign(const RingPtr<Residue>& ring, int t_degree, int max_y_degree,
                                          const DecideOptions& opts = {}) {
  if (t_degree < 1) throw std::invalid_argument("campaign: t-degree must be at least 1");
  if (max_y_degree < 0) throw std::invalid_argument("campaign: y-degree bound must be nonnegative");
  const std::uint64_t count =
      saturating_power(ypoly_count(ring->field(), max_y_degree), t_degree);
  if (count > kDefaultOracleGuard) throw BudgetExceeded("campaign exceeds the candidate guard");
  CampaignReport report{ring, t_degree, max_y_degree, {}, 0, 0};
  for_each_monic(ring, t_degree, max_y_degree, [&](const SkewPoly<Residue>& f) {
    Verdict<Residue> v = decide(f, opts);
    const bool oracle_reducible = scan_generic(f, derive_search_bounds(f)).has_value();
    const bool agree = (v.is_reducible() && oracle_reducible) || (v.is_irreducible() && !oracle_reducible);
    ++(agree ? report.agreements : report.disagreements);
    report.records.push_back({f, std::move(v), oracle_reducible, agree});
  });
  return report;
}

}  // namespace skew
