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

// Seeded generators and ring fixtures shared by the test binaries.

#include "skew/skew.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace skew::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Residue scalar(const PrimeField& f) { return f.element(static_cast<std::uint64_t>(uniform(0, static_cast<int>(f.p) - 1))); }
  Rational scalar(const RationalField&) {
    if (uniform(0, 3) == 0) return Rational(0);
    return Rational(BigInt(uniform(-9, 9)), BigInt(uniform(1, 4)));
  }

  template <class F>
  auto nonzero_scalar(const F& f) {
    while (true) {
      auto s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }

  template <class F>
  YPoly<typename F::value_type> ypoly(const F& f, int max_degree) {
    using K = typename F::value_type;
    const int d = uniform(-1, max_degree);
    std::vector<K> cs;
    for (int i = 0; i <= d; ++i) cs.push_back(scalar(f));
    return YPoly<K>(f, std::move(cs));
  }

  template <class K>
  SkewPoly<K> skew(const RingPtr<K>& ring, int max_t, int max_y) {
    const int n = uniform(-1, max_t);
    std::vector<YPoly<K>> cs;
    for (int i = 0; i <= n; ++i) cs.push_back(ypoly(ring->field(), max_y));
    return SkewPoly<K>(ring, std::move(cs));
  }

  template <class K>
  SkewPoly<K> nonzero_skew(const RingPtr<K>& ring, int max_t, int max_y) {
    while (true) {
      auto f = skew(ring, max_t, max_y);
      if (!f.is_zero()) return f;
    }
  }

  template <class K>
  SkewPoly<K> monic(const RingPtr<K>& ring, int degree, int max_y) {
    std::vector<YPoly<K>> cs;
    for (int i = 0; i < degree; ++i) cs.push_back(ypoly(ring->field(), max_y));
    cs.push_back(YPoly<K>::one(ring->field()));
    return SkewPoly<K>(ring, std::move(cs));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

template <class K>
struct NamedRing {
  std::string name;
  RingPtr<K> ring;
};

template <class F>
YPoly<typename F::value_type> y_power(const F& f, int k) {
  return YPoly<typename F::value_type>::monomial(f.one(), k);
}

/// One ring per class: quantum plane, Weyl, A_h for h in {1, y, y^2}, general twisted.
template <class F>
std::vector<NamedRing<typename F::value_type>> ring_catalog(const F& f) {
  using K = typename F::value_type;
  const K two = f.from_int(2);
  const K three = f.from_int(3);
  return {
      {"quantum", share(RingSpec<K>::quantum_plane(f, two))},
      {"weyl", share(RingSpec<K>::quantized_weyl(f, three.is_zero() ? two : three))},
      {"ah1", share(RingSpec<K>::a_h(f, YPoly<K>::one(f)))},
      {"ahy", share(RingSpec<K>::a_h(f, y_power(f, 1)))},
      {"ahy2", share(RingSpec<K>::a_h(f, y_power(f, 2)))},
      {"twisted", share(RingSpec<K>::twisted(f, three.is_zero() ? two : three, two))},
  };
}

/// Parses with the ring's own field; keeps test bodies short.
template <class K>
SkewPoly<K> P(const RingPtr<K>& ring, std::string_view text) {
  return parse_poly<K>(text, ring);
}

template <class F>
YPoly<typename F::value_type> Y(const F& f, std::string_view text) {
  return parse_ypoly<typename F::value_type>(text, f);
}

}  // namespace skew::testing
