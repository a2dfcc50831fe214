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
 * @file ring.hpp
 * @brief Ring data for R = K[y][t; sigma, delta].
 *
 * sigma is the K-automorphism y -> alpha*y + beta of K[y].  delta is one of
 *
 *   - zero (twisted polynomial ring, quantum plane when beta = 0, alpha != 1),
 *   - the quantized Weyl derivation (g(qy) - g(y)) / (qy - y) with sigma(y) = qy,
 *   - the A_h derivation r -> r' h with sigma the identity.
 *
 * Up to isomorphism these cover all of the rings this library reasons about.
 */

#include "skew/ypoly.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace skew {

template <class K>
struct SigmaMap {
  K alpha;
  K beta;

  friend bool operator==(const SigmaMap&, const SigmaMap&) = default;
};

enum class DeltaKind { zero, quantized_weyl, a_h };

template <class K>
struct DeltaMap {
  DeltaKind kind = DeltaKind::zero;
  std::optional<YPoly<K>> h;  // set iff kind == a_h

  friend bool operator==(const DeltaMap&, const DeltaMap&) = default;
};

enum class RingClass { quantum_plane, quantized_weyl, a_h, twisted };

inline const char* to_string(RingClass c) {
  switch (c) {
    case RingClass::quantum_plane: return "quantum";
    case RingClass::quantized_weyl: return "weyl";
    case RingClass::a_h: return "ah";
    case RingClass::twisted: return "twisted";
  }
  return "?";
}

template <class K>
class RingSpec {
 public:
  using field_type = FieldOf<K>;

  RingSpec(field_type field, SigmaMap<K> sigma, DeltaMap<K> delta)
      : field_(std::move(field)), sigma_(std::move(sigma)), delta_(std::move(delta)) {
    validate();
  }

  static RingSpec quantum_plane(const field_type& f, const K& q) {
    if (q == f.one() || q.is_zero()) throw std::invalid_argument("quantum plane requires q != 0 and q != 1");
    return RingSpec(f, {q, f.zero()}, {});
  }
  static RingSpec quantized_weyl(const field_type& f, const K& q) {
    return RingSpec(f, {q, f.zero()}, {DeltaKind::quantized_weyl, std::nullopt});
  }
  static RingSpec a_h(const field_type& f, const YPoly<K>& h) {
    return RingSpec(f, {f.one(), f.zero()}, {DeltaKind::a_h, h});
  }
  static RingSpec twisted(const field_type& f, const K& alpha, const K& beta) {
    return RingSpec(f, {alpha, beta}, {});
  }

  [[nodiscard]] const field_type& field() const { return field_; }
  [[nodiscard]] const SigmaMap<K>& sigma_map() const { return sigma_; }
  [[nodiscard]] const DeltaMap<K>& delta_map() const { return delta_; }
  [[nodiscard]] const K& alpha() const { return sigma_.alpha; }
  [[nodiscard]] const K& beta() const { return sigma_.beta; }
  [[nodiscard]] bool is_twisted() const { return delta_.kind == DeltaKind::zero; }
  [[nodiscard]] bool sigma_is_identity() const { return sigma_.alpha == field_.one() && sigma_.beta.is_zero(); }
  /// The h of A_h; throws for other rings.
  [[nodiscard]] const YPoly<K>& h() const {
    if (!delta_.h) throw std::logic_error("ring is not A_h");
    return *delta_.h;
  }

  [[nodiscard]] RingClass ring_class() const {
    switch (delta_.kind) {
      case DeltaKind::quantized_weyl: return RingClass::quantized_weyl;
      case DeltaKind::a_h: return RingClass::a_h;
      case DeltaKind::zero: break;
    }
    if (sigma_.beta.is_zero() && !(sigma_.alpha == field_.one())) return RingClass::quantum_plane;
    return RingClass::twisted;
  }

  YPoly<K> sigma(const YPoly<K>& b) const {
    if (sigma_is_identity()) return b;
    return compose_affine(b, sigma_.alpha, sigma_.beta);
  }
  /// sigma^{-1}(y) = (y - beta) / alpha.
  YPoly<K> sigma_inv(const YPoly<K>& b) const {
    if (sigma_is_identity()) return b;
    const K inv = sigma_.alpha.inv();
    return compose_affine(b, inv, -(sigma_.beta * inv));
  }
  /// sigma^n for any integer n.
  YPoly<K> sigma_pow(const YPoly<K>& b, int n) const {
    YPoly<K> r = b;
    for (int i = 0; i < n; ++i) r = sigma(r);
    for (int i = 0; i > n; --i) r = sigma_inv(r);
    return r;
  }

  YPoly<K> delta(const YPoly<K>& b) const {
    switch (delta_.kind) {
      case DeltaKind::zero: return YPoly<K>(field_);
      case DeltaKind::a_h: return derivative(b) * *delta_.h;
      case DeltaKind::quantized_weyl: {
        if (b.is_constant()) return YPoly<K>(field_);
        const YPoly<K> num = compose_affine(b, sigma_.alpha, field_.zero()) - b;
        const YPoly<K> den = YPoly<K>::monomial(sigma_.alpha - field_.one(), 1);
        auto [quot, rem] = divrem(num, den);
        if (!rem.is_zero()) throw InvariantError("quantized Weyl derivation: inexact division");
        return quot;
      }
    }
    throw InvariantError("unknown derivation kind");
  }

  /// Least weight of t for which y-degree weighting is compatible with
  /// t*a = sigma(a) t + delta(a): delta raises degree by at most this much.
  [[nodiscard]] int newton_slope() const {
    if (delta_.kind != DeltaKind::a_h) return 0;
    const Degree dh = delta_.h->degree();
    return dh.is_finite() ? std::max(0, dh.value() - 1) : 0;
  }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  void validate() const {
    if (!(sigma_.alpha.field() == field_) || !(sigma_.beta.field() == field_)) {
      throw std::invalid_argument("mixed-field operands");
    }
    if (sigma_.alpha.is_zero()) throw std::invalid_argument("sigma requires alpha != 0");
    switch (delta_.kind) {
      case DeltaKind::zero:
        if (delta_.h) throw std::invalid_argument("zero derivation carries no h");
        break;
      case DeltaKind::quantized_weyl:
        if (!sigma_.beta.is_zero()) throw std::invalid_argument("quantized Weyl algebra requires sigma(y) = qy");
        if (sigma_.alpha == field_.one()) throw std::invalid_argument("quantized Weyl algebra requires q != 1");
        if (delta_.h) throw std::invalid_argument("quantized Weyl derivation carries no h");
        break;
      case DeltaKind::a_h:
        if (!sigma_is_identity()) throw std::invalid_argument("A_h requires sigma = identity");
        if (!delta_.h) throw std::invalid_argument("A_h requires h");
        if (!(delta_.h->field() == field_)) throw std::invalid_argument("mixed-field operands");
        break;
    }
  }

  field_type field_;
  SigmaMap<K> sigma_;
  DeltaMap<K> delta_;
};

template <class K>
using RingPtr = std::shared_ptr<const RingSpec<K>>;

template <class K>
RingPtr<K> share(RingSpec<K> spec) {
  return std::make_shared<const RingSpec<K>>(std::move(spec));
}

}  // namespace skew
