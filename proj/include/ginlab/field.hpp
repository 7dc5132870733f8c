#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "ginlab/rng.hpp"

namespace ginlab {

inline constexpr std::uint32_t kDefaultPrime = 2147483647u;

/// Residues modulo a prime p < 2^31. Elements are kept reduced in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t characteristic() const noexcept { return p_; }
  /// Number of elements; used to decide whether random sampling is "generic enough".
  double size() const noexcept { return static_cast<double>(p_); }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  Element from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  /// Accepts a (possibly huge) signed integer or a fraction `a/b`.
  Element from_string(std::string_view text) const;

  bool is_zero(Element a) const noexcept { return a == 0; }
  bool is_one(Element a) const noexcept { return a == 1; }
  bool equal(Element a, Element b) const noexcept { return a == b; }

  Element add(Element a, Element b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(Element a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }
  std::string to_string(Element a) const { return std::to_string(to_signed(a)); }
  std::string name() const { return "fp:" + std::to_string(p_); }

  Element random(SplitMix64& rng) const { return static_cast<Element>(rng.below(p_)); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
    return a.p_ == b.p_;
  }

 private:
  std::uint32_t p_;
};

/// Exact rationals backed by GMP.
class RationalField {
 public:
  using Element = mpq_class;

  /// Bound of the integer box random scalars are drawn from.
  static constexpr std::int64_t kRandomBound = 1000000;

  std::uint32_t characteristic() const noexcept { return 0; }
  double size() const noexcept { return 1e300; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
  Element from_string(std::string_view text) const;

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return a * inv(b); }

  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string name() const { return "qq"; }

  Element random(SplitMix64& rng) const {
    auto span = static_cast<std::uint64_t>(2 * kRandomBound + 1);
    return from_int(static_cast<std::int64_t>(rng.below(span)) - kRandomBound);
  }

  friend bool operator==(const RationalField&, const RationalField&) noexcept { return true; }
};

/// Deterministic trial-division primality test; p < 2^32.
bool is_prime(std::uint64_t n) noexcept;

}  // namespace ginlab
