#include "ginlab/linalg.hpp"

#include <omp.h>

#include <utility>

namespace ginlab {

namespace {

template <class F>
void swap_rows(DenseMatrix<F>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// Normalizes the pivot row; returns false when column `col` has no pivot at or below `r`.
template <class F>
bool prepare_pivot(DenseMatrix<F>& m, std::size_t r, std::size_t col) {
  const F& k = m.field();
  std::size_t piv = r;
  while (piv < m.rows() && k.is_zero(m(piv, col))) ++piv;
  if (piv == m.rows()) return false;
  swap_rows(m, r, piv);
  auto inv = k.inv(m(r, col));
  for (std::size_t j = col; j < m.cols(); ++j) m(r, j) = k.mul(m(r, j), inv);
  return true;
}

template <class F>
void eliminate_row(DenseMatrix<F>& m, std::size_t i, std::size_t r, std::size_t col) {
  const F& k = m.field();
  if (k.is_zero(m(i, col))) return;
  auto f = m(i, col);
  auto* dst = m.row(i);
  const auto* src = m.row(r);
  for (std::size_t j = col; j < m.cols(); ++j) {
    if (!k.is_zero(src[j])) dst[j] = k.sub(dst[j], k.mul(f, src[j]));
  }
}

}  // namespace

template <class F>
std::vector<std::size_t> row_reduce_serial(DenseMatrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    if (!prepare_pivot(m, r, col)) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != r) eliminate_row(m, i, r, col);
    }
    pivots.push_back(col);
    ++r;
  }
  m.truncate_rows(r);
  return pivots;
}

template <class F>
std::vector<std::size_t> row_reduce_parallel(DenseMatrix<F>& m, int threads) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const auto nrows = static_cast<std::ptrdiff_t>(m.rows());
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    if (!prepare_pivot(m, r, col)) continue;
#pragma omp parallel for num_threads(threads) schedule(static)
    for (std::ptrdiff_t i = 0; i < nrows; ++i) {
      if (static_cast<std::size_t>(i) != r) eliminate_row(m, static_cast<std::size_t>(i), r, col);
    }
    pivots.push_back(col);
    ++r;
  }
  m.truncate_rows(r);
  return pivots;
}

template <class F>
std::vector<std::vector<typename F::Element>> nullspace(DenseMatrix<F> m, int threads) {
  const F& k = m.field();
  auto pivots = row_reduce(m, threads);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Element>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Element> v(m.cols(), k.zero());
    v[free] = k.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = k.neg(m(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
typename F::Element determinant(DenseMatrix<F> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const F& k = m.field();
  auto det = k.one();
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && k.is_zero(m(piv, col))) ++piv;
    if (piv == n) return k.zero();
    if (piv != col) {
      swap_rows(m, piv, col);
      det = k.neg(det);
    }
    det = k.mul(det, m(col, col));
    auto inv = k.inv(m(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (k.is_zero(m(i, col))) continue;
      auto f = k.mul(m(i, col), inv);
      for (std::size_t j = col; j < n; ++j) m(i, j) = k.sub(m(i, j), k.mul(f, m(col, j)));
    }
  }
  return det;
}

template std::vector<std::size_t> row_reduce_serial(DenseMatrix<PrimeField>&);
template std::vector<std::size_t> row_reduce_serial(DenseMatrix<RationalField>&);
template std::vector<std::size_t> row_reduce_parallel(DenseMatrix<PrimeField>&, int);
template std::vector<std::size_t> row_reduce_parallel(DenseMatrix<RationalField>&, int);
template std::vector<std::vector<PrimeField::Element>> nullspace(DenseMatrix<PrimeField>, int);
template std::vector<std::vector<RationalField::Element>> nullspace(DenseMatrix<RationalField>,
                                                                    int);
template PrimeField::Element determinant(DenseMatrix<PrimeField>);
template RationalField::Element determinant(DenseMatrix<RationalField>);

}  // namespace ginlab
