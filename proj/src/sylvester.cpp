#include "ginlab/sylvester.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>

#include "ginlab/errors.hpp"
#include "ginlab/partial_elim.hpp"

namespace ginlab {

namespace {

constexpr std::size_t kMaxMinorColumns = 12;

template <class F>
std::vector<Polynomial<F>> x0_coefficients(const Polynomial<F>& f, const Ring<F>& small,
                                           const char* which) {
  if (f.is_zero()) throw std::invalid_argument(std::string(which) + " is zero");
  if (!f.is_homogeneous()) throw std::invalid_argument(std::string(which) + " is not homogeneous");
  auto profile = x0_profile(f, small);
  const int a = profile.x0_degree;
  if (!(profile.initial_coefficient.is_unit() && f.field().is_one(profile.initial_coefficient.terms()[0].coeff)) ||
      f.degree() != a) {
    throw std::invalid_argument(std::string(which) + " is not monic in x0");
  }
  std::vector<std::vector<Term<F>>> parts(a + 1);
  for (const auto& t : f.terms()) parts[a - t.mono[0]].push_back({drop_x0(t.mono), t.coeff});
  std::vector<Polynomial<F>> out;
  for (auto& part : parts) out.push_back(Polynomial<F>::from_terms(small, std::move(part)));
  return out;
}

std::size_t check_shape(std::size_t rows, std::size_t cols) {
  if (rows > cols) throw std::invalid_argument("maximal minors need rows <= columns");
  if (cols > kMaxMinorColumns) {
    throw ResourceLimit("maximal minors limited to " + std::to_string(kMaxMinorColumns) + " columns");
  }
  return rows;
}

// Column subsets of size k as bitmasks, in lexicographic order of the sorted column lists.
std::vector<std::uint32_t> subsets(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> out;
  std::vector<int> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), 1);
  do {
    std::uint32_t mask = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (pick[c]) mask |= 1u << c;
    }
    out.push_back(mask);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Laplace expansion of the top-k-rows minor on `mask` along row k-1.
template <class F, class Lookup>
Polynomial<F> expand(const PolyMatrix<F>& m, std::uint32_t mask, Lookup&& sub) {
  const int k = std::popcount(mask);
  Polynomial<F> det(m.ring);
  int idx = 0;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (!(mask >> c & 1u)) continue;
    const auto& entry = m.at(static_cast<std::size_t>(k - 1), c);
    if (!entry.is_zero()) {
      const Polynomial<F>& rest = sub(mask & ~(1u << c));
      if (!rest.is_zero()) {
        Polynomial<F> term = entry * rest;
        det = ((k - 1 + idx) % 2 == 0) ? det + term : det - term;
      }
    }
    ++idx;
  }
  return det;
}

template <class F>
std::vector<Polynomial<F>> collect(const std::vector<Polynomial<F>>& all, MinorStats* stats) {
  std::vector<Polynomial<F>> out;
  for (const auto& p : all) {
    if (!p.is_zero()) out.push_back(p);
  }
  if (stats) {
    stats->total = all.size();
    stats->zero = all.size() - out.size();
  }
  return out;
}

}  // namespace

template <class F>
PolyMatrix<F>::PolyMatrix(Ring<F> r, std::size_t m, std::size_t n)
    : ring(std::move(r)), rows(m), cols(n), entries(m * n, Polynomial<F>(ring)) {}

template <class F>
bool PolyMatrix<F>::ledger_consistent() const {
  if (!row_degrees || !col_degrees) return false;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& e = at(i, j);
      if (e.is_zero()) continue;
      if (!e.is_homogeneous() || e.degree() != (*row_degrees)[i] + (*col_degrees)[j]) return false;
    }
  }
  return true;
}

template <class F>
PolyMatrix<F> build_sylp(const Polynomial<F>& f, const Polynomial<F>& g, int p) {
  if (!f.ring()->same_as(*g.ring())) throw std::invalid_argument("f and g from different rings");
  Ring<F> small = small_ring(f.ring());
  auto fc = x0_coefficients(f, small, "f");
  auto gc = x0_coefficients(g, small, "g");
  const int a = static_cast<int>(fc.size()) - 1;
  const int b = static_cast<int>(gc.size()) - 1;
  if (a > b) throw std::invalid_argument("need deg_x0 f <= deg_x0 g");
  if (p < 0 || p >= a) throw std::invalid_argument("need 0 <= p < deg_x0 f");
  const int rows = a + b - p;
  PolyMatrix<F> m(small, rows, a + b);
  std::vector<int> row_deg(rows), col_deg(a + b);
  for (int k = 0; k < rows; ++k) row_deg[k] = k;
  for (int j = 0; j < b; ++j) col_deg[j] = -j;
  for (int j = 0; j < a; ++j) col_deg[b + j] = -j;
  for (int k = 0; k < rows; ++k) {
    for (int j = 0; j < b; ++j) {
      if (k - j >= 0 && k - j <= a) m.at(k, j) = fc[k - j];
    }
    for (int j = 0; j < a; ++j) {
      if (k - j >= 0 && k - j <= b) m.at(k, b + j) = gc[k - j];
    }
  }
  m.row_degrees = row_deg;
  m.col_degrees = col_deg;
  return m;
}

template <class F>
std::vector<Polynomial<F>> maximal_minors_serial(const PolyMatrix<F>& m, MinorStats* stats) {
  const std::size_t k = check_shape(m.rows, m.cols);
  std::unordered_map<std::uint32_t, Polynomial<F>> memo;
  Polynomial<F> one = Polynomial<F>::constant(m.ring, m.ring->field().one());
  std::function<const Polynomial<F>&(std::uint32_t)> det = [&](std::uint32_t mask) -> const Polynomial<F>& {
    if (mask == 0) return one;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Polynomial<F> value = expand(m, mask, det);
    return memo.emplace(mask, std::move(value)).first->second;
  };
  std::vector<Polynomial<F>> all;
  for (auto mask : subsets(m.cols, k)) all.push_back(det(mask));
  return collect(all, stats);
}

template <class F>
std::vector<Polynomial<F>> maximal_minors_parallel(const PolyMatrix<F>& m, int threads,
                                                   MinorStats* stats) {
  const std::size_t k = check_shape(m.rows, m.cols);
  std::vector<Polynomial<F>> table(std::size_t{1} << m.cols, Polynomial<F>(m.ring));
  table[0] = Polynomial<F>::constant(m.ring, m.ring->field().one());
  auto lookup = [&](std::uint32_t mask) -> const Polynomial<F>& { return table[mask]; };
  for (std::size_t level = 1; level <= k; ++level) {
    auto masks = subsets(m.cols, level);
    const auto count = static_cast<std::ptrdiff_t>(masks.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) table[masks[i]] = expand(m, masks[i], lookup);
  }
  std::vector<Polynomial<F>> all;
  for (auto mask : subsets(m.cols, k)) all.push_back(table[mask]);
  return collect(all, stats);
}

template <class F>
IdealHandle<F> maximal_minors_ideal(const PolyMatrix<F>& m, int threads, MinorStats* stats) {
  auto minors = threads <= 1 ? maximal_minors_serial(m, stats)
                             : maximal_minors_parallel(m, threads, stats);
  return IdealHandle<F>(m.ring, std::move(minors));
}

template <class F>
PolyMatrix<F> unit_reduce(const PolyMatrix<F>& input) {
  PolyMatrix<F> m = input;
  const F& k = m.ring->field();
  while (m.rows > 0 && m.cols > 0) {
    std::size_t pr = m.rows, pc = m.cols;
    for (std::size_t i = 0; i < m.rows && pr == m.rows; ++i) {
      for (std::size_t j = 0; j < m.cols; ++j) {
        if (m.at(i, j).is_unit()) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr == m.rows) break;
    auto inv = k.inv(m.at(pr, pc).terms()[0].coeff);
    PolyMatrix<F> next(m.ring, m.rows - 1, m.cols - 1);
    for (std::size_t i = 0, ni = 0; i < m.rows; ++i) {
      if (i == pr) continue;
      const auto& miq = m.at(i, pc);
      for (std::size_t j = 0, nj = 0; j < m.cols; ++j) {
        if (j == pc) continue;
        Polynomial<F> entry = m.at(i, j);
        if (!miq.is_zero() && !m.at(pr, j).is_zero()) entry -= (m.at(pr, j) * miq).scaled(inv);
        next.at(ni, nj) = std::move(entry);
        ++nj;
      }
      ++ni;
    }
    if (m.row_degrees && m.col_degrees) {
      auto rd = *m.row_degrees;
      auto cd = *m.col_degrees;
      rd.erase(rd.begin() + static_cast<std::ptrdiff_t>(pr));
      cd.erase(cd.begin() + static_cast<std::ptrdiff_t>(pc));
      next.row_degrees = rd;
      next.col_degrees = cd;
    }
    m = std::move(next);
  }
  if (m.row_degrees && m.col_degrees && !m.col_degrees->empty()) {
    int shift = -*std::min_element(m.col_degrees->begin(), m.col_degrees->end());
    for (auto& c : *m.col_degrees) c += shift;
    for (auto& r : *m.row_degrees) r -= shift;
  }
  return m;
}

int en_regularity(const std::vector<int>& row_degrees, const std::vector<int>& col_degrees) {
  const auto m = static_cast<int>(row_degrees.size());
  const auto n = static_cast<int>(col_degrees.size());
  if (m == 0) throw std::invalid_argument("matrix has no rows");
  if (m > n) throw std::invalid_argument("need rows <= columns");
  int sum = 0;
  for (int a : row_degrees) sum += a;
  for (int b : col_degrees) sum += b;
  int top = *std::max_element(row_degrees.begin(), row_degrees.end());
  return sum + (top - 1) * (n - m);
}

int kp_regularity_formula(int a, int b, int p) {
  if (!(1 <= p && p < a && a <= b)) throw std::invalid_argument("need 1 <= p < a <= b");
  return static_cast<int>(a * b + binomial(a - p + 1, 2) - binomial(a + 1, 2) + p * (a - p - 1));
}

template <class F>
int codimension(const IdealHandle<F>& ideal, int degree_cap) {
  return ideal.nvars() - krull_dimension(ideal, degree_cap);
}

#define GINLAB_SYL_INSTANTIATE(F)                                                              \
  template struct PolyMatrix<F>;                                                               \
  template PolyMatrix<F> build_sylp(const Polynomial<F>&, const Polynomial<F>&, int);          \
  template std::vector<Polynomial<F>> maximal_minors_serial(const PolyMatrix<F>&, MinorStats*); \
  template std::vector<Polynomial<F>> maximal_minors_parallel(const PolyMatrix<F>&, int,       \
                                                              MinorStats*);                    \
  template IdealHandle<F> maximal_minors_ideal(const PolyMatrix<F>&, int, MinorStats*);        \
  template PolyMatrix<F> unit_reduce(const PolyMatrix<F>&);                                    \
  template int codimension(const IdealHandle<F>&, int);

GINLAB_SYL_INSTANTIATE(PrimeField)
GINLAB_SYL_INSTANTIATE(RationalField)

}  // namespace ginlab
