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

#include "support.hpp"

#include <gtest/gtest.h>

#include <functional>

namespace skew {
namespace {

using testing::Gen;
using testing::P;
using testing::Y;

const RationalField kQ;
const PrimeField kF3(3);
const PrimeField kF5(5);
const PrimeField kF7(7);

using Rp = RingPtr<Residue>;
using Rq = RingPtr<Rational>;

Rp quantum(const PrimeField& f, long long q) { return share(RingSpec<Residue>::quantum_plane(f, f.from_int(q))); }
Rp weyl(const PrimeField& f, long long q) { return share(RingSpec<Residue>::quantized_weyl(f, f.from_int(q))); }
Rp ah(const PrimeField& f, std::string_view h) { return share(RingSpec<Residue>::a_h(f, Y(f, h))); }
Rq quantum_q(long long q) { return share(RingSpec<Rational>::quantum_plane(kQ, Rational(q))); }

bool oracle_reducible(const SkewPoly<Residue>& f) { return scan_generic(f, derive_search_bounds(f)).has_value(); }

template <class K>
std::string cited(const Verdict<K>& v) {
  return v.criterion() ? std::string(to_string(*v.criterion())) : "<none>";
}

template <class K>
void expect_witness(const Verdict<K>& v, const SkewPoly<K>& f) {
  ASSERT_TRUE(v.is_reducible());
  EXPECT_EQ(v.left() * v.right(), f);
  EXPECT_GE(v.left().degree().value(), 1);
  EXPECT_GE(v.right().degree().value(), 1);
}

// ---------------------------------------------------------------------------
// Verdict

TEST(Verdict, ReducibleWitnessIsVerified) {
  auto r = quantum(kF7, 2);
  auto f = P(r, "t^2 - y^2");
  EXPECT_NO_THROW(Verdict<Residue>::reducible(P(r, "t - 3*y"), P(r, "t - 2*y"), f, CriterionId::twisted_deg2_scan));
  EXPECT_THROW(Verdict<Residue>::reducible(P(r, "t - 2*y"), P(r, "t - 3*y"), f, CriterionId::twisted_deg2_scan),
               InvariantError);
  EXPECT_THROW(Verdict<Residue>::reducible(P(r, "1"), f, f, CriterionId::twisted_deg2_scan), InvariantError);
}

TEST(Verdict, CriterionStringsAreStable) {
  EXPECT_EQ(to_string(CriterionId::t2a_odd_degree), "sec2.t2-a.odd-degree");
  EXPECT_EQ(to_string(CriterionId::twisted_deg4_scan), "thm1.1.iv");
  EXPECT_EQ(to_string(CriterionId::quantum_scalar_deg2), "cor.irredquantum.i");
  EXPECT_EQ(to_string(CriterionId::ah_deg2_scan), "prop.Ah.deg2.scan");
  EXPECT_EQ(to_string(Outcome::unknown), "UNKNOWN");
}

// ---------------------------------------------------------------------------
// Examples per decider

TEST(Decide, Deg2TwistedExamples) {
  auto r = quantum(kF7, 2);
  auto f = P(r, "t^2 - y^2");
  auto v = decide_deg2_twisted(f);
  expect_witness(v, f);
  EXPECT_EQ(v.left(), P(r, "t - 3*y"));
  EXPECT_EQ(v.right(), P(r, "t - 2*y"));
  auto g = decide_deg2_twisted(P(r, "t^2 - y"));
  EXPECT_TRUE(g.is_irreducible());
  EXPECT_EQ(g.criterion(), CriterionId::t2a_odd_degree);
  EXPECT_FALSE(oracle_reducible(P(r, "t^2 - y")));
  for (const auto& nr : testing::ring_catalog(kF7)) {
    auto sq = P(nr.ring, "t^2");
    auto w = decide(sq);
    expect_witness(w, sq);
    EXPECT_EQ(w.left(), P(nr.ring, "t")) << nr.name;
    EXPECT_EQ(w.right(), P(nr.ring, "t")) << nr.name;
  }
  EXPECT_THROW(decide_deg2_twisted(P(weyl(kF7, 2), "t^2 - y")), std::invalid_argument);
  EXPECT_THROW(decide_deg2_twisted(P(r, "t^3 - y")), std::invalid_argument);
}

TEST(Decide, Deg2GeneralExamples) {
  auto w = weyl(kF5, 2);
  auto v = decide_deg2_general(P(w, "t^2 - y"));
  EXPECT_TRUE(v.is_irreducible());
  EXPECT_EQ(v.criterion(), CriterionId::weyl_deg2_degree);
  EXPECT_FALSE(oracle_reducible(P(w, "t^2 - y")));

  auto a = ah(kF5, "y^2");
  auto u = decide_deg2_general(P(a, "t^2 - y^3"));
  EXPECT_TRUE(u.is_irreducible());
  EXPECT_EQ(u.criterion(), CriterionId::ah_t2a_large_h);
  EXPECT_FALSE(oracle_reducible(P(a, "t^2 - y^3")));

  auto f = P(w, "t^2 - 1");
  auto s = decide_deg2_general(f);
  expect_witness(s, f);
  EXPECT_EQ(s.left(), P(w, "t + 1"));
  EXPECT_EQ(s.right(), P(w, "t - 1"));
  EXPECT_EQ(s.criterion(), CriterionId::weyl_scalar_deg2);
}

TEST(Decide, Deg3TwistedExamples) {
  auto r = quantum(kF7, 2);
  auto v = decide_deg3_twisted(P(r, "t^3 - y"));
  EXPECT_TRUE(v.is_irreducible());
  EXPECT_EQ(v.criterion(), CriterionId::t3a_degree_mod3);

  auto f = P(r, "t^3 - y^3");
  auto w = decide_deg3_twisted(f);
  expect_witness(w, f);
  EXPECT_EQ(w.right(), P(r, "t - y"));
  EXPECT_TRUE(right_divrem(f, P(r, "t - y")).remainder.is_zero());
  // c^3 = 1 in F7 exactly for c in {1, 2, 4}
  for (long long c = 1; c < 7; ++c) {
    const bool root = right_rem_linear(f, YPoly<Residue>::monomial(kF7.from_int(c), 1)).is_zero();
    EXPECT_EQ(root, c == 1 || c == 2 || c == 4) << c;
  }

  auto cube = P(r, "t^3");
  auto z = decide_deg3_twisted(cube);
  expect_witness(z, cube);
  EXPECT_TRUE(z.left() == P(r, "t") || z.right() == P(r, "t"));
}

TEST(Decide, Deg3GeneralExamples) {
  auto a = ah(kF3, "y^2");
  auto v = decide_deg3_general(P(a, "t^3 - y"));
  EXPECT_TRUE(v.is_irreducible());
  EXPECT_EQ(v.criterion(), CriterionId::derivation_deg3_scan);
  EXPECT_FALSE(oracle_reducible(P(a, "t^3 - y")));

  for (const auto& nr : testing::ring_catalog(kF7)) {
    auto f = P(nr.ring, "t - y") * P(nr.ring, "t^2 + 3");
    auto w = decide_deg3_general(f);
    expect_witness(w, f);
  }
  for (const auto& nr : testing::ring_catalog(kQ)) {
    auto f = P(nr.ring, "t - y") * P(nr.ring, "t^2 + 3");
    auto w = decide_deg3_general(f);
    expect_witness(w, f);
    EXPECT_EQ(w.criterion(), CriterionId::small_coefficient_search) << nr.name;
  }

  auto plain = share(RingSpec<Residue>::twisted(kF7, kF7.one(), kF7.zero()));
  auto g = P(plain, "t^3 - t");
  auto u = decide_deg3_general(g);
  expect_witness(u, g);
  EXPECT_TRUE(u.left() == P(plain, "t") || u.right() == P(plain, "t"));
}

TEST(Decide, Deg4TwistedExamples) {
  auto r3 = quantum(kF3, 2);
  auto v = decide_deg4_twisted(P(r3, "t^4 - y"));
  EXPECT_TRUE(v.is_irreducible());
  EXPECT_EQ(v.criterion(), CriterionId::t4a_scan);
  EXPECT_FALSE(oracle_reducible(P(r3, "t^4 - y")));

  auto r7 = quantum(kF7, 2);
  auto f = P(r7, "t^2 - y") * P(r7, "t^2 - y");
  auto w = decide_deg4_twisted(f);
  expect_witness(w, f);
  EXPECT_EQ(w.left().degree(), Degree(2));

  auto g = P(r7, "t^4 - 1");
  auto u = decide_deg4_twisted(g);
  expect_witness(u, g);
  // the t^4 - a remainders vanish at c = 0, d = 1
  const auto& R = *r7;
  const auto c = YPoly<Residue>(kF7);
  const auto d = Y(kF7, "1");
  EXPECT_TRUE((R.sigma_pow(c, 2) * R.sigma(c) * c + R.sigma_pow(d, 2) * c + R.sigma_pow(c, 2) * R.sigma(d)).is_zero());
  EXPECT_EQ(R.sigma_pow(d, 2) * d + R.sigma_pow(c, 2) * R.sigma(c) * d, Y(kF7, "1"));
  EXPECT_EQ(P(r7, "t^2 - 1") * P(r7, "t^2 + 1"), g);
}

TEST(Decide, TmMinusAExamples) {
  auto q = quantum_q(2);
  auto v = decide_tm_minus_a(P(q, "t^2 - y^3"), 2);
  EXPECT_TRUE(v.is_irreducible());
  EXPECT_EQ(v.criterion(), CriterionId::t2a_odd_degree);
  auto c = decide_tm_minus_a(P(q, "t^2 - 3"), 2);
  EXPECT_TRUE(c.is_irreducible());
  EXPECT_EQ(c.criterion(), CriterionId::t2a_constant_nonsquare);
  EXPECT_EQ(crit_tm_minus_a(P(q, "t^2 - 3"), 2)->criterion(), CriterionId::tma_constant);

  auto r = quantum(kF7, 2);
  auto f = P(r, "t^3 - 3*y^3");
  EXPECT_TRUE(in_power_alpha_class(kF7.from_int(3), 3, kF7.from_int(2)));
  EXPECT_FALSE(crit_tm_minus_a(f, 3).has_value());
  EXPECT_FALSE(crit_t3_minus_a(f).has_value());
  auto e = decide_tm_minus_a(f, 3);
  EXPECT_FALSE(e.is_unknown());
  EXPECT_EQ(e.is_reducible(), oracle_reducible(f));

  EXPECT_THROW(decide_tm_minus_a(P(r, "t^4 - y"), 4), std::invalid_argument);
  EXPECT_THROW(decide_tm_minus_a(P(r, "t^3 - y*t - y"), 3), std::invalid_argument);
  EXPECT_THROW(decide_tm_minus_a(P(r, "t^2 - y"), 3), std::invalid_argument);
}

TEST(Decide, TmMinusAHigherPrimes) {
  // 5 | 10, so F11 has primitive fifth roots of unity
  const PrimeField f11(11);
  auto r = quantum(f11, 2);
  auto v = decide(P(r, "t^5 - y"));
  EXPECT_TRUE(v.is_irreducible());
  EXPECT_EQ(v.criterion(), CriterionId::tma_degree);
  auto c = decide(P(r, "t^5 - 2"));
  EXPECT_TRUE(c.is_irreducible());
  EXPECT_EQ(c.criterion(), CriterionId::tma_constant);
  // 5 does not divide 6 in F7
  auto u = decide(P(quantum(kF7, 2), "t^5 - y"));
  EXPECT_TRUE(u.is_unknown());
  EXPECT_NE(u.reason().find("hypothesis"), std::string::npos);
  EXPECT_TRUE(decide(P(r, "t^5 - t - y")).is_unknown());
  EXPECT_TRUE(decide(P(r, "t^6 - y")).is_unknown());
}

TEST(Decide, ScalarExamples) {
  auto q = quantum_q(2);
  auto v = decide_deg2_deg3_scalar(P(q, "t^2 - t - 1"));
  EXPECT_TRUE(v.is_irreducible());
  EXPECT_EQ(v.criterion(), CriterionId::quantum_scalar_deg2);

  auto w = weyl(kF5, 2);
  auto f = P(w, "t^2 - 1");
  auto s = decide_deg2_deg3_scalar(f);
  expect_witness(s, f);
  EXPECT_EQ(s.left(), P(w, "t + 1"));
  EXPECT_EQ(s.right(), P(w, "t - 1"));

  auto a = share(RingSpec<Rational>::a_h(kQ, Y(kQ, "y^3")));
  auto u = decide_deg2_deg3_scalar(P(a, "t^2 - (y + 2)*t - (y^2 + 3)"));
  EXPECT_TRUE(u.is_unknown());
}

TEST(Decide, ScalarRejectsCharacteristicTwo) {
  const PrimeField f2(2);
  auto r = share(RingSpec<Residue>::twisted(f2, f2.one(), f2.one()));
  EXPECT_THROW(decide_deg2_deg3_scalar(P(r, "t^2 + t + 1")), std::domain_error);
}

TEST(Decide, QuantumQuadraticExamples) {
  auto q = quantum_q(2);
  auto v = decide_prop_I(P(q, "t^2 - y^3*t - y"));
  EXPECT_TRUE(v.is_irreducible());
  EXPECT_EQ(v.criterion(), CriterionId::quantum_deg2_degree);
  auto w = share(RingSpec<Rational>::quantized_weyl(kQ, Rational(2)));
  auto u = decide_prop_I(P(w, "t^2 - y*t - y^5"));
  EXPECT_TRUE(u.is_irreducible());
  EXPECT_EQ(u.criterion(), CriterionId::weyl_deg2_degree);
  EXPECT_TRUE(decide_prop_I(P(q, "t^2 - t - y^2")).is_unknown());
  auto a = share(RingSpec<Rational>::a_h(kQ, Y(kQ, "y")));
  EXPECT_THROW(decide_prop_I(P(a, "t^2 - y")), std::invalid_argument);
}

TEST(Decide, AhDeg2Examples) {
  auto h1 = share(RingSpec<Rational>::a_h(kQ, Y(kQ, "y")));
  auto v = decide_Ah_deg2(P(h1, "t^2 - y^5"));
  EXPECT_TRUE(v.is_irreducible());
  EXPECT_EQ(v.criterion(), CriterionId::ah_t2a_small_h);
  auto h2 = share(RingSpec<Rational>::a_h(kQ, Y(kQ, "y^2")));
  auto u = decide_Ah_deg2(P(h2, "t^2 - y^3"));
  EXPECT_TRUE(u.is_irreducible());
  EXPECT_EQ(u.criterion(), CriterionId::ah_t2a_large_h);

  auto a = ah(kF3, "y^2");
  auto f = P(a, "t - y") * P(a, "t - (y + 1)");
  auto w = decide_Ah_deg2(f);
  expect_witness(w, f);
  EXPECT_EQ(w.criterion(), CriterionId::ah_deg2_scan);
  EXPECT_THROW(decide_Ah_deg2(P(quantum(kF3, 2), "t^2 - y")), std::invalid_argument);
}

TEST(Decide, DispatcherExamples) {
  auto r = quantum(kF7, 2);
  auto v = decide(P(r, "t^2 - y"));
  EXPECT_TRUE(v.is_irreducible());
  EXPECT_EQ(v.criterion(), CriterionId::t2a_odd_degree);
  auto f = P(r, "t^2 - y^2");
  auto w = decide(f);
  expect_witness(w, f);
  EXPECT_EQ(w.left(), P(r, "t - 3*y"));
  EXPECT_EQ(w.right(), P(r, "t - 2*y"));
  EXPECT_THROW(decide(P(r, "1")), std::invalid_argument);
  EXPECT_THROW(decide(SkewPoly<Residue>::zero(r)), std::invalid_argument);
  EXPECT_EQ(decide(P(r, "t - y^3")).criterion(), CriterionId::degree_one);
}

TEST(Decide, NormalizesConstantLeadingCoefficient) {
  auto r = quantum(kF7, 2);
  auto f = P(r, "3*t^2 - 3*y^2");
  auto v = decide(f);
  expect_witness(v, f);
  auto g = decide(P(r, "3*t^2 - y"));
  EXPECT_TRUE(g.is_irreducible());
  auto u = decide(P(r, "y*t^2 - y"));
  EXPECT_TRUE(u.is_unknown());
  EXPECT_EQ(u.reason(), "non-monic with non-unit leading coefficient");
}

TEST(Decide, RationalFieldIsSoundButIncomplete) {
  auto q = quantum_q(2);
  auto u = decide(P(q, "t^2 - (y + 1)*t - (y^2 + 2)"));
  EXPECT_TRUE(u.is_unknown());
  auto f = P(q, "t - (y + 1)") * P(q, "t - 2*y");
  auto w = decide(f);
  expect_witness(w, f);
  DecideOptions off;
  off.small_coefficient_search = false;
  EXPECT_TRUE(decide(f, off).is_unknown());
}

TEST(Decide, BudgetExhaustionIsUnknown) {
  auto r = quantum(kF7, 2);
  DecideOptions tiny;
  tiny.budget = 3;
  auto v = decide(P(r, "t^3 - y^3*t - y^6"), tiny);
  EXPECT_TRUE(v.is_unknown());
}

// ---------------------------------------------------------------------------
// Closed forms of the linear and quadratic remainders

template <class K>
YPoly<K> S(const RingSpec<K>& R, const YPoly<K>& b, int n) {
  return R.sigma_pow(b, n);
}

TEST(ClosedForms, DegreeTwoAndThree) {
  Gen g(201);
  for (const auto& nr : testing::ring_catalog(kF7)) {
    const auto& R = *nr.ring;
    for (int i = 0; i < 40; ++i) {
      auto a0 = g.ypoly(kF7, 2), a1 = g.ypoly(kF7, 2), a2 = g.ypoly(kF7, 2), b = g.ypoly(kF7, 2);
      auto f2 = SkewPoly<Residue>(nr.ring, {-a0, -a1, Y(kF7, "1")});
      ASSERT_EQ(right_rem_linear(f2, b), R.sigma(b) * b + R.delta(b) - a1 * b - a0) << nr.name;
      if (R.ring_class() == RingClass::a_h) {
        ASSERT_EQ(right_rem_linear(f2, b), b * b + derivative(b) * R.h() - a1 * b - a0);
      }
      if (!R.is_twisted()) continue;
      auto f3 = SkewPoly<Residue>(nr.ring, {-a0, -a1, -a2, Y(kF7, "1")});
      ASSERT_EQ(right_rem_linear(f3, b), S(R, b, 2) * S(R, b, 1) * b - a2 * S(R, b, 1) * b - a1 * b - a0);
      ASSERT_EQ(S(R, left_rem_linear(f3, b), 2),
                S(R, b, 2) * S(R, b, 1) * b - S(R, b, 2) * S(R, b, 1) * a2 - S(R, b, 2) * S(R, a1, 1) - S(R, a0, 2));
    }
  }
}

// The degree-4 closed forms are written with + between the a_i; they are the remainders of
// t^4 + a3 t^3 + a2 t^2 + a1 t + a0.
TEST(ClosedForms, DegreeFourPlusConvention) {
  Gen g(202);
  for (const auto& nr : testing::ring_catalog(kF7)) {
    const auto& R = *nr.ring;
    if (!R.is_twisted()) continue;
    for (int i = 0; i < 40; ++i) {
      auto a0 = g.ypoly(kF7, 2), a1 = g.ypoly(kF7, 2), a2 = g.ypoly(kF7, 2), a3 = g.ypoly(kF7, 2);
      auto b = g.ypoly(kF7, 1), c = g.ypoly(kF7, 1), d = g.ypoly(kF7, 2);
      auto plus = SkewPoly<Residue>(nr.ring, {a0, a1, a2, a3, Y(kF7, "1")});
      auto eq1 = S(R, b, 3) * S(R, b, 2) * S(R, b, 1) * b + a3 * S(R, b, 2) * S(R, b, 1) * b + a2 * S(R, b, 1) * b +
                 a1 * b + a0;
      ASSERT_EQ(right_rem_linear(plus, b), eq1);
      auto eq2 = S(R, b, 3) * S(R, b, 2) * S(R, b, 1) * b + S(R, b, 3) * S(R, b, 2) * S(R, b, 1) * a3 +
                 S(R, b, 3) * S(R, b, 2) * S(R, a2, 1) + S(R, b, 3) * S(R, a1, 2) + S(R, a0, 3);
      ASSERT_EQ(S(R, left_rem_linear(plus, b), 3), eq2);
      auto eq3 = S(R, c, 2) * S(R, c, 1) * c + S(R, d, 2) * c + S(R, c, 2) * S(R, d, 1) +
                 a3 * (S(R, d, 1) + S(R, c, 1) * c) + a2 * c + a1;
      auto eq4 = S(R, d, 2) * d + S(R, c, 2) * S(R, c, 1) * d + a3 * S(R, c, 1) * d + a2 * d + a0;
      auto [r1, r0] = quadratic_right_remainder(plus, c, d);
      ASSERT_EQ(r1, eq3);
      ASSERT_EQ(r0, eq4);
      auto quad = SkewPoly<Residue>(nr.ring, {-d, -c, Y(kF7, "1")});
      auto div = right_divrem(plus, quad);
      ASSERT_EQ(div.remainder, SkewPoly<Residue>(nr.ring, {r0, r1}));
    }
  }
}

TEST(ClosedForms, QuadraticRemainderWithDerivation) {
  Gen g(203);
  for (const auto& nr : testing::ring_catalog(kF7)) {
    for (int i = 0; i < 30; ++i) {
      auto f = g.monic(nr.ring, g.uniform(2, 5), 2);
      auto c = g.ypoly(kF7, 2), d = g.ypoly(kF7, 2);
      auto [r1, r0] = quadratic_right_remainder(f, c, d);
      auto div = right_divrem(f, SkewPoly<Residue>(nr.ring, {-d, -c, Y(kF7, "1")}));
      ASSERT_EQ(div.remainder, SkewPoly<Residue>(nr.ring, {r0, r1})) << nr.name;
    }
  }
}

// ---------------------------------------------------------------------------
// Properties

void agreement_cube(const Rp& r, int t_degree, int D) {
  std::size_t n = 0;
  for_each_monic(r, t_degree, D, [&](const SkewPoly<Residue>& f) {
    ++n;
    auto v = decide(f);
    ASSERT_FALSE(v.is_unknown()) << to_string(f);
    ASSERT_EQ(v.is_reducible(), oracle_reducible(f)) << to_string(f) << " cited " << cited(v);
  });
  EXPECT_GT(n, 0U);
}

TEST(CriteriaProperty, AgreementQuantumF3) {
  agreement_cube(quantum(kF3, 2), 2, 2);
  agreement_cube(quantum(kF3, 2), 3, 1);
}

TEST(CriteriaProperty, AgreementQuantumF5) {
  agreement_cube(quantum(kF5, 2), 2, 1);
  agreement_cube(quantum(kF5, 3), 2, 1);
  agreement_cube(quantum(kF5, 3), 3, 0);
}

TEST(CriteriaProperty, AgreementWeylAndAh) {
  agreement_cube(weyl(kF3, 2), 2, 2);
  agreement_cube(weyl(kF5, 3), 2, 1);
  agreement_cube(ah(kF3, "y"), 3, 1);
  agreement_cube(ah(kF3, "y^2"), 2, 2);
  agreement_cube(ah(kF5, "1"), 2, 1);
}

TEST(CriteriaProperty, AgreementTwistedWithShift) {
  agreement_cube(share(RingSpec<Residue>::twisted(kF5, kF5.from_int(2), kF5.one())), 2, 1);
  agreement_cube(share(RingSpec<Residue>::twisted(kF3, kF3.one(), kF3.one())), 3, 1);
}

TEST(CriteriaProperty, AgreementDegreeFour) {
  agreement_cube(quantum(kF3, 2), 4, 0);
  agreement_cube(weyl(kF3, 2), 4, 0);
  agreement_cube(ah(kF3, "y"), 4, 0);
}

// Every sufficient criterion, run on its own, is confirmed by the oracle.
TEST(CriteriaProperty, SufficientCriteriaNeverContradictOracle) {
  using Crit = std::function<MaybeVerdict<Residue>(const SkewPoly<Residue>&)>;
  const std::vector<Crit> crits = {
      crit_t2_minus_a<Residue>,
      crit_t3_minus_a<Residue>,
      [](const SkewPoly<Residue>& f) { return crit_tm_minus_a(f, 2); },
      [](const SkewPoly<Residue>& f) { return crit_tm_minus_a(f, 3); },
      crit_quantum_deg2_degree<Residue>,
      crit_quantum_deg2_constants<Residue>,
      crit_quantum_deg3_constants<Residue>,
      crit_scalar_deg2<Residue>,
      crit_quantum_scalar_deg3<Residue>,
      crit_weyl_deg2_degree<Residue>,
      crit_ah_deg2_degree<Residue>,
      crit_ah_deg2_constants<Residue>,
      crit_ah_t2_minus_a<Residue>,
  };
  std::vector<Rp> rings = {quantum(kF5, 2), quantum(kF7, 3), weyl(kF5, 2), ah(kF5, "y"), ah(kF5, "y^2"),
                           share(RingSpec<Residue>::twisted(kF7, kF7.from_int(2), kF7.from_int(3)))};
  Gen g(301);
  std::size_t fired = 0;
  for (const auto& r : rings) {
    for (int i = 0; i < 250; ++i) {
      const int m = g.uniform(2, 3);
      auto f = g.monic(r, m, 3);
      if (g.coin()) {
        for (int k = 1; k < m; ++k) f = f - SkewPoly<Residue>::monomial(r, f.coeff(static_cast<std::size_t>(k)), k);
      }
      const bool reducible = oracle_reducible(f);
      for (const auto& crit : crits) {
        auto v = crit(f);
        if (!v) continue;
        ++fired;
        ASSERT_EQ(v->is_reducible(), reducible) << to_string(f) << " in " << ring_to_string(*r) << " cited " << cited(*v);
      }
    }
  }
  EXPECT_GT(fired, 200U);
}

// Scalar quadratics: the skew verdict equals irreducibility in K[t], found by enumerating roots.
TEST(CriteriaProperty, ScalarQuadraticsMatchRootEnumeration) {
  for (const PrimeField& f : {kF3, kF5, kF7}) {
    for (const auto& r : {quantum(f, 2), weyl(f, 2)}) {
      for (std::uint64_t a1 = 0; a1 < f.p; ++a1) {
        for (std::uint64_t a0 = 0; a0 < f.p; ++a0) {
          bool has_root = false;
          for (std::uint64_t x = 0; x < f.p; ++x) {
            has_root = has_root || (f.element(x) * f.element(x) - f.element(a1) * f.element(x) - f.element(a0)).is_zero();
          }
          auto poly = SkewPoly<Residue>(r, {YPoly<Residue>::constant(-f.element(a0)),
                                            YPoly<Residue>::constant(-f.element(a1)), YPoly<Residue>::one(f)});
          auto v = decide(poly);
          ASSERT_EQ(v.is_reducible(), has_root) << to_string(poly) << " in " << ring_to_string(*r);
        }
      }
    }
  }
}

// Without a primitive m-th root of unity, the t^m - a tests are never cited.
TEST(CriteriaProperty, HypothesisFailureNeverCitesTmTests) {
  auto is_tm = [](const Verdict<Residue>& v) {
    if (!v.criterion()) return false;
    auto id = *v.criterion();
    return id == CriterionId::tma_degree || id == CriterionId::tma_constant || id == CriterionId::tma_leading ||
           id == CriterionId::tma_constant_term;
  };
  Gen g(401);
  // F7 has no primitive 5th root; F3 has no primitive cube root; Weyl and A_h have delta != 0.
  for (int i = 0; i < 60; ++i) {
    auto r = quantum(kF7, 2);
    auto a = g.ypoly(kF7, 6);
    auto f = P(r, "t^5") - SkewPoly<Residue>::constant(r, a);
    EXPECT_FALSE(is_tm(decide(f)));
    EXPECT_FALSE(crit_tm_minus_a(f, 5).has_value());
    auto r3 = quantum(kF3, 2);
    auto f3 = P(r3, "t^3") - SkewPoly<Residue>::constant(r3, g.ypoly(kF3, 4));
    EXPECT_FALSE(crit_tm_minus_a(f3, 3).has_value());
    EXPECT_FALSE(is_tm(decide_tm_minus_a(f3, 3)));
    auto w = weyl(kF7, 2);
    auto fw = P(w, "t^2") - SkewPoly<Residue>::constant(w, g.ypoly(kF7, 4));
    EXPECT_FALSE(crit_tm_minus_a(fw, 2).has_value());
  }
}

// The constant-term test in the t^m - a family: corrected reading versus the literal one.
TEST(CriteriaProperty, ConstantTermTestCorrectedReading) {
  std::size_t corrected_fired = 0;
  std::size_t literal_wrong = 0;
  for (const auto& [r, m] : std::vector<std::pair<Rp, int>>{{quantum(kF7, 2), 2}, {quantum(kF7, 2), 3}, {quantum(kF5, 2), 2}}) {
    enumerate_ypolys(r->field(), 2, [&](const YPoly<Residue>& a) {
      if (a.is_zero()) return false;
      const auto f = SkewPoly<Residue>::monomial(r, YPoly<Residue>::one(r->field()), m) - SkewPoly<Residue>::constant(r, a);
      const bool reducible = oracle_reducible(f);
      const auto a0 = a.constant_term();
      const bool corrected = !a0.is_zero() && !is_mth_power(a0, static_cast<unsigned>(m));
      const bool literal = a0.is_zero() || is_mth_power(a0, static_cast<unsigned>(m));
      if (corrected) {
        ++corrected_fired;
        EXPECT_FALSE(reducible) << to_string(f);
      }
      if (literal && reducible) ++literal_wrong;
      return false;
    });
  }
  EXPECT_GT(corrected_fired, 0U);
  EXPECT_GT(literal_wrong, 0U);
}

// Degree bounds: widening every scan never turns Irreducible into Reducible.
TEST(CriteriaProperty, WidenedBoundsAgree) {
  Gen g(501);
  DecideOptions wide;
  wide.widen_bounds = true;
  for (const auto& r : {quantum(kF3, 2), weyl(kF3, 2), ah(kF3, "y^2")}) {
    for (int i = 0; i < 40; ++i) {
      auto f = g.monic(r, g.uniform(2, 3), 1);
      auto v = decide(f);
      auto w = decide(f, wide);
      ASSERT_EQ(v.outcome(), w.outcome()) << to_string(f);
    }
  }
}

// Scalar cubics over F3: irreducible in K[t] if and only if irreducible in R.
TEST(CriteriaProperty, ScalarCubicsMatchRootEnumeration) {
  auto r = quantum(kF3, 2);
  for_each_monic(r, 3, 0, [&](const SkewPoly<Residue>& f) {
    bool root = false;
    for (std::uint64_t x = 0; x < 3; ++x) {
      Residue acc = kF3.zero();
      for (int i = 3; i >= 0; --i) acc = acc * kF3.element(x) + f.coeff(static_cast<std::size_t>(i)).constant_term();
      root = root || acc.is_zero();
    }
    auto v = decide(f);
    EXPECT_EQ(v.is_irreducible(), !root) << to_string(f);
    EXPECT_EQ(oracle_reducible(f), root) << to_string(f);
  });
}

}  // namespace
}  // namespace skew
