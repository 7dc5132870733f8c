#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ginlab/monomial.hpp"

namespace ginlab {

/// Monomial ideal given by its minimal generators, kept sorted by degree and
/// then lex-descending within a degree.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes `gens`; `names` defaults to x0..x<n-1>.
  MonomialIdeal(int nvars, std::vector<Monomial> gens, std::vector<std::string> names = {});

  static MonomialIdeal unit(int nvars, std::vector<std::string> names = {});

  int nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t size() const noexcept { return gens_.size(); }

  bool contains(const Monomial& m) const noexcept;
  bool contains(const MonomialIdeal& other) const noexcept;
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return !gens_.empty() && gens_.front().is_one(); }
  /// Largest minimal-generator degree, -1 for the zero ideal.
  int max_degree() const noexcept { return gens_.empty() ? -1 : gens_.back().degree(); }

  /// Monomials of degree d lying in the ideal, lex-descending.
  std::vector<Monomial> monomials_in_degree(int d) const;
  /// Generators of degree exactly d.
  std::vector<Monomial> gens_of_degree(int d) const;

  /// J : x_var
  MonomialIdeal quotient(int var) const;
  MonomialIdeal operator+(const MonomialIdeal& other) const;
  /// J * m
  MonomialIdeal times(const Monomial& m) const;

  std::vector<std::string> to_strings() const;
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) noexcept {
    return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
  }

 private:
  int nvars_ = 0;
  std::vector<Monomial> gens_;
  std::vector<std::string> names_;
};

/// Removes generators divisible by another and sorts canonically.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Dimensions h(d) = dim_k (S/I)_d for d = 0..bound.
struct HilbertFunction {
  std::vector<std::int64_t> dims;
  /// Eventual constant value, when the quotient has dimension <= 1.
  std::optional<std::int64_t> stable_value;

  int bound() const noexcept { return static_cast<int>(dims.size()) - 1; }
  std::int64_t operator[](int d) const { return dims.at(static_cast<std::size_t>(d)); }
  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

/// Hilbert series K(t)/(1-t)^n = Q(t)/(1-t)^dim of S/J.
struct HilbertSeries {
  int nvars = 0;
  std::vector<std::int64_t> numerator;  // K(t), coefficients by power of t
  std::vector<std::int64_t> reduced;    // Q(t)
  int dimension = 0;                    // Krull dimension; -1 for the unit ideal
  std::int64_t degree = 0;              // Q(1)

  /// h(d), valid for every d >= 0.
  std::int64_t value(int d) const;
  HilbertFunction function(int bound) const;
};

HilbertSeries hilbert_series(const MonomialIdeal& j);

/// Hilbert function of S/J up to `bound` together with its series data.
inline HilbertFunction monomial_hilbert(const MonomialIdeal& j, int bound) {
  return hilbert_series(j).function(bound);
}

/// x_i m in J implies x_j m in J for all j < i.
bool is_borel_fixed(const MonomialIdeal& j);

/// Maximal generator degree; throws DomainError unless J is Borel-fixed.
int borel_regularity(const MonomialIdeal& j);

/// Graded Betti numbers beta_{i,j} keyed by (i, j).
using BettiTable = std::map<std::pair<int, int>, std::int64_t>;

/// Eliahou–Kervaire resolution numbers; throws DomainError for non-Borel input.
BettiTable ek_betti(const MonomialIdeal& j);
/// max(j - i) over nonzero entries.
int betti_regularity(const BettiTable& table);

struct Saturation {
  MonomialIdeal ideal;
  /// Least d with J_e = Jsat_e for all e >= d; empty when they never agree.
  std::optional<int> saturation_degree;
};

/// J : x_var^infinity. With `maximal_ideal` set, the result is J : m^infinity,
/// which needs J Borel-fixed and var = n-1.
Saturation saturate_monomial(const MonomialIdeal& j, int var, bool maximal_ideal = false);

}  // namespace ginlab
