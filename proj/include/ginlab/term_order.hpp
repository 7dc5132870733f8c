#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ginlab/monomial.hpp"

namespace ginlab {

/// Descriptor of a degree-compatible term order. Every order compares total
/// degree first; the descriptor only fixes how ties inside one degree are broken.
///
///  - lex:      leftmost nonzero entry of a-b positive
///  - revlex:   rightmost nonzero entry of a-b negative
///  - weight:   w.a, then a mandatory tiebreak order (w strictly positive)
///  - product:  consecutive variable blocks, each with its own inner order;
///              block (1, r) with any inner order is an elimination order for x0
class TermOrder {
 public:
  enum class Kind { Lex, Revlex, Weight, Product };

  static TermOrder lex();
  static TermOrder revlex();
  static TermOrder weight(std::vector<std::int64_t> weights, TermOrder tiebreak);
  static TermOrder product(std::vector<int> block_sizes, std::vector<TermOrder> inner);
  /// (1, nvars-1) product order: x0-degree first, then `inner` on x1..x_{n-1}.
  static TermOrder elimination(int nvars, TermOrder inner);

  /// Parses `lex`, `revlex`, `weight:w0,w1,...` (revlex tiebreak) or `elim`
  /// (elimination of x0 with revlex inside; needs `nvars`).
  static TermOrder parse(std::string_view text, int nvars);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
  const std::vector<int>& block_sizes() const noexcept { return blocks_; }
  const std::vector<TermOrder>& children() const noexcept { return children_; }

  /// Nonnegative integer matrix with `nvars` linearly independent rows, first row
  /// all ones; the order is lexicographic comparison of M.a.
  std::vector<std::vector<std::int64_t>> matrix(int nvars) const;

  std::string to_string() const;

 private:
  Kind kind_ = Kind::Lex;
  std::vector<std::int64_t> weights_;
  std::vector<int> blocks_;
  std::vector<TermOrder> children_;
};

/// A TermOrder bound to a variable count. Monomials map to 128-bit keys with
/// key(a*b) = key(a) + key(b); comparing keys compares monomials.
class CompiledOrder {
 public:
  using Key = unsigned __int128;

  CompiledOrder(const TermOrder& order, int nvars);

  int nvars() const noexcept { return nvars_; }
  const TermOrder& order() const noexcept { return order_; }
  const std::vector<std::vector<std::int64_t>>& rows() const noexcept { return rows_; }

  Key key(const Monomial& m) const noexcept {
    Key k = 0;
    for (int i = 0; i < nvars_; ++i) k += static_cast<Key>(m[i]) * columns_[i];
    return k;
  }
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return key(a) > key(b); }

  /// Two compiled orders are the same order iff their reduced matrices agree.
  friend bool operator==(const CompiledOrder& a, const CompiledOrder& b) noexcept {
    return a.rows_ == b.rows_;
  }

 private:
  TermOrder order_;
  int nvars_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<Key> columns_;
};

/// cmp_monomials: degree first, then the order's tiebreak. Throws on ring mismatch.
std::strong_ordering cmp_monomials(const Monomial& m, const Monomial& n, const TermOrder& order);

}  // namespace ginlab
