#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ginlab {

inline constexpr int kMaxVars = 8;
inline constexpr int kMaxExponent = 127;
inline constexpr int kMaxDegree = 255;

/// Monomial x^a in at most kMaxVars variables. Exponents are packed one byte per
/// variable with x0 in the most significant byte, so comparing `packed()` values of
/// equal-length monomials is a pure lexicographic comparison of exponent vectors.
class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in `nvars` variables.
  explicit Monomial(int nvars);
  Monomial(int nvars, std::span<const int> exponents);
  Monomial(std::initializer_list<int> exponents);

  static Monomial variable(int nvars, int index, int power = 1);
  static Monomial from_packed(int nvars, std::uint64_t packed);

  int nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  std::uint64_t packed() const noexcept { return packed_; }
  int operator[](int i) const noexcept { return static_cast<int>((packed_ >> shift(i)) & 0xff); }
  std::vector<int> exponents() const;
  bool is_one() const noexcept { return degree_ == 0; }
  /// Largest variable index dividing the monomial, -1 for the monomial 1.
  int max_index() const noexcept;
  /// Smallest variable index dividing the monomial, -1 for the monomial 1.
  int min_index() const noexcept;

  bool divides(const Monomial& other) const noexcept {
    constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
    return (((other.packed_ | kHigh) - packed_) & kHigh) == kHigh;
  }
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires `divisor.divides(*this)`.
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const noexcept { return gcd(other).is_one(); }
  Monomial with_exponent(int i, int e) const;

  std::string to_string(std::span<const std::string> names = {}) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.packed_ == b.packed_ && a.nvars_ == b.nvars_;
  }
  /// Canonical, order-agnostic sort key: total degree first, then lex.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.packed_ <=> b.packed_;
  }

  static constexpr int shift(int i) noexcept { return 8 * (kMaxVars - 1 - i); }

 private:
  std::uint64_t packed_ = 0;
  std::uint16_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

/// All monomials of degree d in n variables, lexicographically descending
/// (x0^d first, x_{n-1}^d last).
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

/// C(n, k) as a 64-bit integer; 0 when k < 0 or k > n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Number of monomials of degree d in n variables.
inline std::int64_t count_monomials(int nvars, int degree) {
  return degree < 0 ? 0 : binomial(degree + nvars - 1, nvars - 1);
}

/// Rank of a degree-d monomial among all degree-d monomials in its ring under a
/// fixed combinatorial numbering (not any term order); a bijection onto
/// [0, count_monomials(n, d)).
std::int64_t combinatorial_rank(const Monomial& m);

std::vector<std::string> default_variable_names(int nvars, int first_index = 0);

}  // namespace ginlab

template <>
struct std::hash<ginlab::Monomial> {
  std::size_t operator()(const ginlab::Monomial& m) const noexcept {
    return std::hash<std::uint64_t>{}(m.packed() * 0x9e3779b97f4a7c15ULL + m.nvars());
  }
};
