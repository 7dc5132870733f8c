#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ginlab/field.hpp"

namespace ginlab {

/// Dense row-major matrix over a coefficient field.
template <class F>
class DenseMatrix {
 public:
  using Element = typename F::Element;

  DenseMatrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const F& field() const noexcept { return field_; }

  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Element* row(std::size_t i) { return data_.data() + i * cols_; }
  const Element* row(std::size_t i) const { return data_.data() + i * cols_; }

  void append_row(const std::vector<Element>& r) {
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }
  /// Drops rows [n, rows()).
  void truncate_rows(std::size_t n) {
    if (n < rows_) {
      rows_ = n;
      data_.resize(rows_ * cols_);
    }
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

/// Row-echelon basis of a growing subspace; answers "is v in the span?".
template <class F>
class EchelonBasis {
 public:
  using Element = typename F::Element;

  EchelonBasis(F field, std::size_t width) : field_(std::move(field)), width_(width) {}

  std::size_t rank() const noexcept { return rows_.size(); }

  /// Reduces `v` against the basis; returns true (and keeps it) when independent.
  bool insert(std::vector<Element> v) {
    reduce(v);
    std::size_t lead = 0;
    while (lead < width_ && field_.is_zero(v[lead])) ++lead;
    if (lead == width_) return false;
    auto inv = field_.inv(v[lead]);
    for (std::size_t j = lead; j < width_; ++j) v[j] = field_.mul(v[j], inv);
    auto pos = std::lower_bound(leads_.begin(), leads_.end(), lead) - leads_.begin();
    leads_.insert(leads_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  bool contains(std::vector<Element> v) const {
    reduce(v);
    for (const auto& x : v) {
      if (!field_.is_zero(x)) return false;
    }
    return true;
  }

 private:
  void reduce(std::vector<Element>& v) const {
    if (v.size() != width_) throw std::invalid_argument("vector length mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t c = leads_[r];
      if (field_.is_zero(v[c])) continue;
      auto f = v[c];
      for (std::size_t j = c; j < width_; ++j) {
        if (!field_.is_zero(rows_[r][j])) v[j] = field_.sub(v[j], field_.mul(f, rows_[r][j]));
      }
    }
  }

  F field_;
  std::size_t width_;
  std::vector<std::size_t> leads_;
  std::vector<std::vector<Element>> rows_;
};

/// Reduced row echelon form in place, scanning columns left to right.
/// Returns the pivot column of each nonzero row; zero rows are removed.
/// Serial reference kernel.
template <class F>
std::vector<std::size_t> row_reduce_serial(DenseMatrix<F>& m);

/// Same contract and bit-identical result as row_reduce_serial; the
/// elimination of each pivot column is distributed over rows with OpenMP.
template <class F>
std::vector<std::size_t> row_reduce_parallel(DenseMatrix<F>& m, int threads);

/// Dispatches to the serial kernel for threads <= 1.
template <class F>
std::vector<std::size_t> row_reduce(DenseMatrix<F>& m, int threads = 1) {
  return threads <= 1 ? row_reduce_serial(m) : row_reduce_parallel(m, threads);
}

template <class F>
std::size_t rank(DenseMatrix<F> m, int threads = 1) {
  return row_reduce(m, threads).size();
}

/// Basis of {v : M v = 0}, one vector of length cols() per free column.
template <class F>
std::vector<std::vector<typename F::Element>> nullspace(DenseMatrix<F> m, int threads = 1);

/// Determinant of a square matrix by elimination.
template <class F>
typename F::Element determinant(DenseMatrix<F> m);

extern template std::vector<std::size_t> row_reduce_serial(DenseMatrix<PrimeField>&);
extern template std::vector<std::size_t> row_reduce_serial(DenseMatrix<RationalField>&);
extern template std::vector<std::size_t> row_reduce_parallel(DenseMatrix<PrimeField>&, int);
extern template std::vector<std::size_t> row_reduce_parallel(DenseMatrix<RationalField>&, int);
extern template std::vector<std::vector<PrimeField::Element>> nullspace(DenseMatrix<PrimeField>,
                                                                        int);
extern template std::vector<std::vector<RationalField::Element>> nullspace(
    DenseMatrix<RationalField>, int);
extern template PrimeField::Element determinant(DenseMatrix<PrimeField>);
extern template RationalField::Element determinant(DenseMatrix<RationalField>);

}  // namespace ginlab
