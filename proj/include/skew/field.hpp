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
 * @file field.hpp
 * @brief Exact scalar fields: the rationals Q and prime fields F_p.
 *
 * Both element types carry enough information to rebuild their field
 * descriptor, so generic code can always ask an element for `field()` and
 * obtain constants from it.  There is no floating point anywhere: every
 * criterion built on top of this is an equality test.
 *
 * Besides arithmetic, this header provides the power-class membership tests
 * used by the irreducibility criteria: m-th powers, the classes
 * K^{x m} * alpha^e, and existence of primitive roots of unity.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace skew {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when an internal consistency check fails (a bug, not a user error).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// Deterministic Miller-Rabin; these witnesses are exact for all 64-bit n.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Largest r >= 0 with r^m <= x (x >= 0).
inline BigInt integer_root_floor(const BigInt& x, unsigned m) {
  if (x < 2 || m == 1) return x;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(x)) + 1;
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (bits / m + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    if (boost::multiprecision::pow(mid, m) <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

// Exact integer m-th root, including negative x for odd m.
inline std::optional<BigInt> exact_integer_root(const BigInt& x, unsigned m) {
  if (x < 0) {
    if (m % 2 == 0) return std::nullopt;
    auto r = exact_integer_root(-x, m);
    if (!r) return std::nullopt;
    return BigInt(-*r);
  }
  BigInt r = integer_root_floor(x, m);
  if (boost::multiprecision::pow(r, m) == x) return r;
  return std::nullopt;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Q

class Rational;

/// Descriptor of the field of rationals.
struct RationalField {
  using value_type = Rational;

  [[nodiscard]] Rational zero() const;
  [[nodiscard]] Rational one() const;
  [[nodiscard]] Rational from_int(long long n) const;
  [[nodiscard]] std::uint64_t characteristic() const { return 0; }
  [[nodiscard]] bool is_finite() const { return false; }
  [[nodiscard]] std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
class Rational {
 public:
  using field_type = RationalField;

  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("division by zero");
    normalize();
  }

  [[nodiscard]] const BigInt& num() const { return num_; }
  [[nodiscard]] const BigInt& den() const { return den_; }
  [[nodiscard]] field_type field() const { return {}; }
  [[nodiscard]] bool is_zero() const { return num_ == 0; }
  [[nodiscard]] bool is_one() const { return num_ == 1 && den_ == 1; }
  [[nodiscard]] bool is_negative() const { return num_ < 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ - b.num_, a.den_);
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  [[nodiscard]] Rational inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(den_, num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  [[nodiscard]] std::string to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_{0};
  BigInt den_{1};
};

inline Rational RationalField::zero() const { return {}; }
inline Rational RationalField::one() const { return Rational(1); }
inline Rational RationalField::from_int(long long n) const { return Rational(n); }

// ---------------------------------------------------------------------------
// F_p

class Residue;

/// Descriptor of a prime field F_p. Primes are word-sized (p < 2^32).
struct PrimeField {
  using value_type = Residue;

  std::uint64_t p = 0;

  PrimeField() = default;
  /// Throws std::invalid_argument unless p is a prime below 2^32.
  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (prime >= (1ULL << 32U)) throw std::invalid_argument("prime field modulus must be below 2^32");
    if (!detail::is_prime_u64(prime)) throw std::invalid_argument(std::to_string(prime) + " is not prime");
  }

  [[nodiscard]] Residue zero() const;
  [[nodiscard]] Residue one() const;
  [[nodiscard]] Residue from_int(long long n) const;
  /// The i-th element in canonical order 0, 1, ..., p-1.
  [[nodiscard]] Residue element(std::uint64_t i) const;
  [[nodiscard]] std::uint64_t characteristic() const { return p; }
  [[nodiscard]] std::uint64_t order() const { return p; }
  [[nodiscard]] bool is_finite() const { return true; }
  [[nodiscard]] std::string name() const { return "F" + std::to_string(p); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

/// An element of F_p, stored as its residue in [0, p).
class Residue {
 public:
  using field_type = PrimeField;

  Residue(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}

  [[nodiscard]] std::uint64_t value() const { return v_; }
  [[nodiscard]] std::uint64_t modulus() const { return p_; }
  [[nodiscard]] field_type field() const {
    PrimeField f;
    f.p = p_;
    return f;
  }
  [[nodiscard]] bool is_zero() const { return v_ == 0; }
  [[nodiscard]] bool is_one() const { return v_ == 1; }
  /// Representative in (-p/2, p/2], used for printing.
  [[nodiscard]] long long symmetric() const {
    return v_ > p_ / 2 ? -static_cast<long long>(p_ - v_) : static_cast<long long>(v_);
  }

  friend Residue operator+(const Residue& a, const Residue& b) {
    check(a, b);
    std::uint64_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return raw(s, a.p_);
  }
  friend Residue operator-(const Residue& a, const Residue& b) {
    check(a, b);
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
  }
  friend Residue operator*(const Residue& a, const Residue& b) {
    check(a, b);
    return raw(a.v_ * b.v_ % a.p_, a.p_);
  }
  friend Residue operator/(const Residue& a, const Residue& b) { return a * b.inv(); }
  Residue operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Residue& operator+=(const Residue& o) { return *this = *this + o; }
  Residue& operator-=(const Residue& o) { return *this = *this - o; }
  Residue& operator*=(const Residue& o) { return *this = *this * o; }
  Residue& operator/=(const Residue& o) { return *this = *this / o; }

  [[nodiscard]] Residue inv() const {
    if (v_ == 0) throw std::domain_error("inverse of zero");
    return raw(detail::pow_mod(v_, p_ - 2, p_), p_);
  }
  [[nodiscard]] Residue pow(std::uint64_t e) const { return raw(detail::pow_mod(v_, e, p_), p_); }

  friend bool operator==(const Residue& a, const Residue& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  [[nodiscard]] std::string to_string() const { return std::to_string(symmetric()); }

 private:
  static Residue raw(std::uint64_t v, std::uint64_t p) {
    Residue r(0, p);
    r.v_ = v;
    return r;
  }
  static void check(const Residue& a, const Residue& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("mixed-field operands");
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

inline Residue PrimeField::zero() const { return Residue(0, p); }
inline Residue PrimeField::one() const { return Residue(1, p); }
inline Residue PrimeField::from_int(long long n) const {
  const auto m = static_cast<long long>(p);
  long long r = n % m;
  if (r < 0) r += m;
  return Residue(static_cast<std::uint64_t>(r), p);
}
inline Residue PrimeField::element(std::uint64_t i) const { return Residue(i, p); }

// ---------------------------------------------------------------------------
// Generic interface

template <class K>
concept FieldElement = std::copy_constructible<K> && requires(const K& a, const K& b) {
  typename K::field_type;
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a.inv() } -> std::same_as<K>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.field() } -> std::same_as<typename K::field_type>;
  { a == b } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

template <class K>
using FieldOf = typename K::field_type;

template <class K>
K power(const K& base, unsigned long long e) {
  K result = base.field().one();
  K b = base;
  while (e > 0) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

/// Power with an integer exponent; negative exponents invert first.
template <class K>
K power_signed(const K& base, long long e) {
  if (e < 0) return power(base.inv(), static_cast<unsigned long long>(-e));
  return power(base, static_cast<unsigned long long>(e));
}

// ---------------------------------------------------------------------------
// Power classes

namespace detail {

// Smallest generator of F_p^x.
inline std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  const auto factors = distinct_prime_factors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(),
                          [&](std::uint64_t r) { return pow_mod(g, (p - 1) / r, p) != 1; });
    if (ok) return g;
  }
  throw InvariantError("no primitive root found");
}

// Discrete log of a (nonzero) to base g in F_p by baby-step giant-step.
inline std::uint64_t discrete_log(std::uint64_t g, std::uint64_t a, std::uint64_t p) {
  const std::uint64_t n = p - 1;
  std::uint64_t m = 1;
  while (m * m < n) ++m;
  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  baby.reserve(m);
  std::uint64_t cur = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = mul_mod(cur, g, p);
  }
  const std::uint64_t giant = pow_mod(pow_mod(g, m, p), p - 2, p);
  std::uint64_t gamma = a % p;
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (auto it = baby.find(gamma); it != baby.end()) return (i * m + it->second) % n;
    gamma = mul_mod(gamma, giant, p);
  }
  throw InvariantError("discrete log failed");
}

inline long long inverse_mod_ll(long long a, long long m) {
  long long old_r = a % m, r = m, old_s = 1, s = 0;
  if (old_r < 0) old_r += m;
  while (r != 0) {
    long long q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  long long v = old_s % m;
  return v < 0 ? v + m : v;
}

}  // namespace detail

/// An m-th root of a in Q, if one exists.
inline std::optional<Rational> mth_root(const Rational& a, unsigned m) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  if (a.is_zero()) throw std::invalid_argument("m-th power test on zero");
  auto n = detail::exact_integer_root(a.num(), m);
  if (!n) return std::nullopt;
  auto d = detail::exact_integer_root(a.den(), m);
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

/// An m-th root of a in F_p, if one exists.
inline std::optional<Residue> mth_root(const Residue& a, unsigned m) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  if (a.is_zero()) throw std::invalid_argument("m-th power test on zero");
  const std::uint64_t p = a.modulus();
  if (p == 2) return a;
  const std::uint64_t n = p - 1;
  const std::uint64_t g = detail::primitive_root(p);
  const std::uint64_t k = detail::discrete_log(g, a.value(), p);
  const std::uint64_t d = detail::gcd_u64(m, n);
  if (k % d != 0) return std::nullopt;
  // Solve m*j = k (mod n): j = (k/d) * (m/d)^{-1} mod n/d.
  const std::uint64_t nd = n / d;
  std::uint64_t j = 0;
  if (nd > 1) {
    const auto inv = static_cast<std::uint64_t>(
        detail::inverse_mod_ll(static_cast<long long>((m / d) % nd), static_cast<long long>(nd)));
    j = detail::mul_mod((k / d) % nd, inv, nd);
  }
  return Residue(detail::pow_mod(g, j, p), p);
}

inline bool is_mth_power(const Rational& a, unsigned m) { return mth_root(a, m).has_value(); }

/// Generalized Euler criterion: a is an m-th power iff a^{(p-1)/gcd(m,p-1)} = 1.
inline bool is_mth_power(const Residue& a, unsigned m) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  if (a.is_zero()) throw std::invalid_argument("m-th power test on zero");
  const std::uint64_t n = a.modulus() - 1;
  if (n == 0) return true;
  const std::uint64_t d = detail::gcd_u64(m, n);
  return a.pow(n / d).is_one();
}

/// Witness for membership of a in K^{x m} * alpha^e: a = root^m * alpha^exponent.
template <class K>
struct PowerClassWitness {
  K root;
  unsigned exponent;
};

/// Returns (c, e) with a = c^m alpha^e and 0 <= e < m if one exists.
/// alpha^m is itself an m-th power, so exponents beyond m - 1 add nothing.
template <class K>
std::optional<PowerClassWitness<K>> power_alpha_class_witness(const K& a, unsigned m, const K& alpha) {
  if (a.is_zero() || alpha.is_zero()) throw std::invalid_argument("power class test on zero");
  if (m == 0) throw std::invalid_argument("m must be positive");
  K shifted = a;
  const K alpha_inv = alpha.inv();
  for (unsigned e = 0; e < m; ++e) {
    if (auto c = mth_root(shifted, m)) return PowerClassWitness<K>{*c, e};
    shifted *= alpha_inv;
  }
  return std::nullopt;
}

/// True iff a = c^m * alpha^e for some nonzero c and integer e >= 0.
template <class K>
bool in_power_alpha_class(const K& a, unsigned m, const K& alpha) {
  return power_alpha_class_witness(a, m, alpha).has_value();
}

/// Whether K contains a primitive m-th root of unity (m prime).
inline bool has_primitive_root_of_unity(const RationalField&, unsigned m) { return m == 2; }

/// Over F_p this holds iff m divides p - 1, which also forces p != m.
inline bool has_primitive_root_of_unity(const PrimeField& f, unsigned m) {
  return m > 0 && (f.p - 1) % m == 0;
}

}  // namespace skew
