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

#include "skew/skewpoly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace skew {

/// Every criterion or search that can settle a question.
enum class CriterionId {
  degree_one,
  t2a_odd_degree,
  t2a_constant_nonsquare,
  t2a_leading_nonsquare,
  t2a_leading_alpha_class,
  t2a_constant_term_nonsquare,
  t3a_degree_mod3,
  t3a_constant_noncube,
  t3a_leading_noncube,
  t3a_leading_alpha_class,
  t3a_constant_term_noncube,
  tma_degree,
  tma_constant,
  tma_leading,
  tma_constant_term,
  quantum_scalar_deg2,
  quantum_scalar_deg3,
  quantum_deg2_degree,
  quantum_deg2_constants,
  quantum_deg3_constants,
  weyl_scalar_deg2,
  weyl_deg2_degree,
  ah_deg2_degree,
  ah_deg2_constants,
  ah_t2a_small_h,
  ah_t2a_large_h,
  ah_deg2_scan,
  twisted_deg2_scan,
  twisted_deg3_scan,
  twisted_t3a_scan,
  twisted_deg4_scan,
  t4a_scan,
  derivation_deg2_scan,
  derivation_deg3_scan,
  derivation_deg4_scan,
  small_coefficient_search,
};

inline constexpr std::string_view to_string(CriterionId id) {
  switch (id) {
    case CriterionId::degree_one: return "def.degree-one";
    case CriterionId::t2a_odd_degree: return "sec2.t2-a.odd-degree";
    case CriterionId::t2a_constant_nonsquare: return "sec2.t2-a.constant-nonsquare";
    case CriterionId::t2a_leading_nonsquare: return "sec2.t2-a.leading-nonsquare";
    case CriterionId::t2a_leading_alpha_class: return "sec2.t2-a.leading-alpha-class";
    case CriterionId::t2a_constant_term_nonsquare: return "sec2.t2-a.constant-term-nonsquare";
    case CriterionId::t3a_degree_mod3: return "sec2.t3-a.degree-mod3";
    case CriterionId::t3a_constant_noncube: return "sec2.t3-a.constant-noncube";
    case CriterionId::t3a_leading_noncube: return "sec2.t3-a.leading-noncube";
    case CriterionId::t3a_leading_alpha_class: return "sec2.t3-a.leading-alpha-class";
    case CriterionId::t3a_constant_term_noncube: return "sec2.t3-a.constant-term-noncube";
    case CriterionId::tma_degree: return "thm.tm-a.i";
    case CriterionId::tma_constant: return "thm.tm-a.constant";
    case CriterionId::tma_leading: return "thm.tm-a.iii";
    case CriterionId::tma_constant_term: return "thm.tm-a.ii";
    case CriterionId::quantum_scalar_deg2: return "cor.irredquantum.i";
    case CriterionId::quantum_scalar_deg3: return "cor.irredquantum.ii";
    case CriterionId::quantum_deg2_degree: return "prop.I.i";
    case CriterionId::quantum_deg2_constants: return "prop.I.ii";
    case CriterionId::quantum_deg3_constants: return "prop.II";
    case CriterionId::weyl_scalar_deg2: return "cor.irredWeyl.i";
    case CriterionId::weyl_deg2_degree: return "cor.irredWeyl.ii";
    case CriterionId::ah_deg2_degree: return "cor.Ah.deg2.i";
    case CriterionId::ah_deg2_constants: return "cor.Ah.deg2.ii";
    case CriterionId::ah_t2a_small_h: return "cor.Ah.t2-a.i";
    case CriterionId::ah_t2a_large_h: return "cor.Ah.t2-a.ii";
    case CriterionId::ah_deg2_scan: return "prop.Ah.deg2.scan";
    case CriterionId::twisted_deg2_scan: return "thm1.1.i";
    case CriterionId::twisted_deg3_scan: return "thm1.1.ii";
    case CriterionId::twisted_t3a_scan: return "thm1.1.iii";
    case CriterionId::twisted_deg4_scan: return "thm1.1.iv";
    case CriterionId::t4a_scan: return "cor.t4-a";
    case CriterionId::derivation_deg2_scan: return "thm.delta.i";
    case CriterionId::derivation_deg3_scan: return "thm.delta.ii";
    case CriterionId::derivation_deg4_scan: return "scan.deg4.delta";
    case CriterionId::small_coefficient_search: return "search.small-coefficients";
  }
  return "?";
}

enum class Outcome { irreducible, reducible, unknown };

inline constexpr std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::irreducible: return "IRREDUCIBLE";
    case Outcome::reducible: return "REDUCIBLE";
    case Outcome::unknown: return "UNKNOWN";
  }
  return "?";
}

/// Result of deciding irreducibility.  A reducible verdict always carries a
/// verified factorization f = left * right with both factors of positive degree.
template <class K>
class Verdict {
 public:
  static Verdict irreducible(CriterionId id) { return Verdict(Outcome::irreducible, id, std::nullopt, {}); }

  /// Throws InvariantError unless left * right == f and both have positive t-degree.
  static Verdict reducible(SkewPoly<K> left, SkewPoly<K> right, const SkewPoly<K>& f, CriterionId id) {
    if (left.degree().value_or(0) < 1 || right.degree().value_or(0) < 1) {
      throw InvariantError("factorization witness has a factor of degree < 1");
    }
    if (!(left * right == f)) throw InvariantError("factorization witness does not multiply back to f");
    return Verdict(Outcome::reducible, id, std::make_pair(std::move(left), std::move(right)), {});
  }

  static Verdict unknown(std::string reason) { return Verdict(Outcome::unknown, std::nullopt, std::nullopt, std::move(reason)); }

  [[nodiscard]] Outcome outcome() const { return outcome_; }
  [[nodiscard]] bool is_irreducible() const { return outcome_ == Outcome::irreducible; }
  [[nodiscard]] bool is_reducible() const { return outcome_ == Outcome::reducible; }
  [[nodiscard]] bool is_unknown() const { return outcome_ == Outcome::unknown; }
  [[nodiscard]] const std::optional<CriterionId>& criterion() const { return criterion_; }
  [[nodiscard]] const SkewPoly<K>& left() const { return witness().first; }
  [[nodiscard]] const SkewPoly<K>& right() const { return witness().second; }
  [[nodiscard]] const std::string& reason() const { return reason_; }

 private:
  Verdict(Outcome o, std::optional<CriterionId> id, std::optional<std::pair<SkewPoly<K>, SkewPoly<K>>> w,
          std::string reason)
      : outcome_(o), criterion_(id), witness_(std::move(w)), reason_(std::move(reason)) {}

  const std::pair<SkewPoly<K>, SkewPoly<K>>& witness() const {
    if (!witness_) throw std::logic_error("verdict carries no factorization");
    return *witness_;
  }

  Outcome outcome_;
  std::optional<CriterionId> criterion_;
  std::optional<std::pair<SkewPoly<K>, SkewPoly<K>>> witness_;
  std::string reason_;
};

/// Thrown when a factor search would exceed its candidate budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace skew
