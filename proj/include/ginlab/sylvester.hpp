#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ginlab/groebner.hpp"

namespace ginlab {

/// Matrix of polynomials with an optional degree ledger: a nonzero entry (i, j)
/// is homogeneous of degree row_degrees[i] + col_degrees[j].
template <class F>
struct PolyMatrix {
  Ring<F> ring;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Polynomial<F>> entries;  // row-major
  std::optional<std::vector<int>> row_degrees;
  std::optional<std::vector<int>> col_degrees;

  PolyMatrix(Ring<F> r, std::size_t m, std::size_t n);
  Polynomial<F>& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const Polynomial<F>& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  /// Every nonzero entry is homogeneous of the degree the ledger predicts.
  bool ledger_consistent() const;
};

/// Top a+b-p rows of the Sylvester matrix of f and g, both monic in x0 of
/// x0-degrees a <= b; entries live in k[x1..x_r]. Column j < b carries the
/// shifted coefficients of f, column b+j those of g. A ledger (row k: k,
/// f-column j: -j, g-column j: -j) is attached.
template <class F>
PolyMatrix<F> build_sylp(const Polynomial<F>& f, const Polynomial<F>& g, int p);

struct MinorStats {
  std::size_t total = 0;
  std::size_t zero = 0;
};

/// All maximal minors by Laplace expansion memoized over column subsets.
/// Serial reference implementation.
template <class F>
std::vector<Polynomial<F>> maximal_minors_serial(const PolyMatrix<F>& m, MinorStats* stats = nullptr);

/// Same minors, same order, with each subset-size level evaluated in parallel.
template <class F>
std::vector<Polynomial<F>> maximal_minors_parallel(const PolyMatrix<F>& m, int threads,
                                                   MinorStats* stats = nullptr);

/// Ideal of the nonzero maximal minors.
template <class F>
IdealHandle<F> maximal_minors_ideal(const PolyMatrix<F>& m, int threads = 1,
                                    MinorStats* stats = nullptr);

/// Eliminates unit entries one at a time (first unit scanning rows top-down,
/// columns left-right) without changing the ideal of maximal minors; the
/// ledger is carried along and shifted so the smallest column degree is 0.
template <class F>
PolyMatrix<F> unit_reduce(const PolyMatrix<F>& m);

/// sum a_i + sum b_j + (max a_i - 1)(n - m) for an m x n matrix.
int en_regularity(const std::vector<int>& row_degrees, const std::vector<int>& col_degrees);

/// ab + C(a-p+1, 2) - C(a+1, 2) + p(a-p-1), for 1 <= p < a <= b.
int kp_regularity_formula(int a, int b, int p);

/// Number of variables minus the Krull dimension of S/I (n + 1 for the unit ideal).
template <class F>
int codimension(const IdealHandle<F>& ideal, int degree_cap = kDefaultDegreeCap);

#define GINLAB_SYL_EXTERN(F)                                                                   \
  extern template struct PolyMatrix<F>;                                                       \
  extern template PolyMatrix<F> build_sylp(const Polynomial<F>&, const Polynomial<F>&, int);  \
  extern template std::vector<Polynomial<F>> maximal_minors_serial(const PolyMatrix<F>&,      \
                                                                   MinorStats*);              \
  extern template std::vector<Polynomial<F>> maximal_minors_parallel(const PolyMatrix<F>&, int, \
                                                                     MinorStats*);            \
  extern template IdealHandle<F> maximal_minors_ideal(const PolyMatrix<F>&, int, MinorStats*); \
  extern template PolyMatrix<F> unit_reduce(const PolyMatrix<F>&);                            \
  extern template int codimension(const IdealHandle<F>&, int);

GINLAB_SYL_EXTERN(PrimeField)
GINLAB_SYL_EXTERN(RationalField)
#undef GINLAB_SYL_EXTERN

}  // namespace ginlab
