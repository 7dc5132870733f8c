#include "ginlab/monomial.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ginlab {

namespace {

void check_nvars(int nvars) {
  if (nvars < 0 || nvars > kMaxVars) {
    throw std::invalid_argument("variable count " + std::to_string(nvars) + " outside [0, " +
                                std::to_string(kMaxVars) + "]");
  }
}

void check_exponent(int e) {
  if (e < 0 || e > kMaxExponent) {
    throw std::out_of_range("exponent " + std::to_string(e) + " outside [0, " +
                            std::to_string(kMaxExponent) + "]");
  }
}

}  // namespace

Monomial::Monomial(int nvars) : nvars_(static_cast<std::uint8_t>(nvars)) { check_nvars(nvars); }

Monomial::Monomial(int nvars, std::span<const int> exponents) : Monomial(nvars) {
  if (static_cast<int>(exponents.size()) != nvars) {
    throw std::invalid_argument("exponent vector length does not match variable count");
  }
  int deg = 0;
  for (int i = 0; i < nvars; ++i) {
    check_exponent(exponents[i]);
    packed_ |= static_cast<std::uint64_t>(exponents[i]) << shift(i);
    deg += exponents[i];
  }
  if (deg > kMaxDegree) throw std::out_of_range("monomial degree above " + std::to_string(kMaxDegree));
  degree_ = static_cast<std::uint16_t>(deg);
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(static_cast<int>(exponents.size()),
               std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial Monomial::variable(int nvars, int index, int power) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
  check_exponent(power);
  Monomial m(nvars);
  m.packed_ = static_cast<std::uint64_t>(power) << shift(index);
  m.degree_ = static_cast<std::uint16_t>(power);
  return m;
}

Monomial Monomial::from_packed(int nvars, std::uint64_t packed) {
  Monomial m(nvars);
  int deg = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = static_cast<int>((packed >> shift(i)) & 0xff);
    if (e != 0 && i >= nvars) throw std::invalid_argument("packed exponent outside ring");
    check_exponent(e);
    deg += e;
  }
  m.packed_ = packed;
  m.degree_ = static_cast<std::uint16_t>(deg);
  return m;
}

std::vector<int> Monomial::exponents() const {
  std::vector<int> out(nvars_);
  for (int i = 0; i < nvars_; ++i) out[i] = (*this)[i];
  return out;
}

int Monomial::max_index() const noexcept {
  for (int i = nvars_ - 1; i >= 0; --i) {
    if ((*this)[i] != 0) return i;
  }
  return -1;
}

int Monomial::min_index() const noexcept {
  for (int i = 0; i < nvars_; ++i) {
    if ((*this)[i] != 0) return i;
  }
  return -1;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("monomials from different rings");
  constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
  std::uint64_t sum = packed_ + other.packed_;
  if ((sum & kHigh) != 0) throw std::out_of_range("exponent overflow in monomial product");
  int deg = degree_ + other.degree_;
  if (deg > kMaxDegree) throw std::out_of_range("monomial degree overflow");
  Monomial m(nvars_);
  m.packed_ = sum;
  m.degree_ = static_cast<std::uint16_t>(deg);
  return m;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (nvars_ != divisor.nvars_) throw std::invalid_argument("monomials from different rings");
  if (!divisor.divides(*this)) throw std::invalid_argument("monomial division is not exact");
  Monomial m(nvars_);
  m.packed_ = packed_ - divisor.packed_;
  m.degree_ = static_cast<std::uint16_t>(degree_ - divisor.degree_);
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("monomials from different rings");
  Monomial m(nvars_);
  int deg = 0;
  for (int i = 0; i < nvars_; ++i) {
    int e = std::max((*this)[i], other[i]);
    m.packed_ |= static_cast<std::uint64_t>(e) << shift(i);
    deg += e;
  }
  if (deg > kMaxDegree) throw std::out_of_range("monomial degree overflow");
  m.degree_ = static_cast<std::uint16_t>(deg);
  return m;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial m(nvars_);
  int deg = 0;
  for (int i = 0; i < nvars_; ++i) {
    int e = std::min((*this)[i], other[i]);
    m.packed_ |= static_cast<std::uint64_t>(e) << shift(i);
    deg += e;
  }
  m.degree_ = static_cast<std::uint16_t>(deg);
  return m;
}

Monomial Monomial::with_exponent(int i, int e) const {
  auto ex = exponents();
  ex.at(i) = e;
  return Monomial(nvars_, ex);
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  if (degree_ == 0) return "1";
  std::string out;
  for (int i = 0; i < nvars_; ++i) {
    int e = (*this)[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  out.reserve(static_cast<std::size_t>(count_monomials(nvars, degree)));
  std::array<int, kMaxVars> ex{};
  // Recursive lex-descending enumeration: larger x0 exponent first.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      ex[var] = remaining;
      out.emplace_back(nvars, std::span<const int>(ex.data(), nvars));
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      ex[var] = e;
      self(self, var + 1, remaining - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t combinatorial_rank(const Monomial& m) {
  // Suffix sums T_j = e_j + ... + e_{n-1} (j >= 1) give strictly decreasing
  // c_j = T_j + (n-1-j); the combinatorial number system ranks the (n-1)-subset.
  static const auto table = [] {
    std::vector<std::array<std::int64_t, kMaxVars>> t(kMaxDegree + kMaxVars + 1);
    for (int a = 0; a < static_cast<int>(t.size()); ++a) {
      for (int k = 0; k < kMaxVars; ++k) t[a][k] = binomial(a, k);
    }
    return t;
  }();
  const int n = m.nvars();
  std::int64_t rank = 0;
  int suffix = 0;
  for (int j = n - 1; j >= 1; --j) {
    suffix += m[j];
    rank += table[suffix + (n - 1 - j)][n - j];
  }
  return rank;
}

std::vector<std::string> default_variable_names(int nvars, int first_index) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(first_index + i));
  return names;
}

}  // namespace ginlab
