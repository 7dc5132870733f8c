#include "ginlab/gin.hpp"

#include <exception>
#include <map>

#include "ginlab/errors.hpp"
#include "ginlab/linalg.hpp"

namespace ginlab {

namespace {

template <class F>
DenseMatrix<F> to_dense(const F& k, const CoordinateChange<F>& change) {
  const std::size_t n = change.matrix.size();
  DenseMatrix<F> m(k, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (change.matrix[i].size() != n) throw std::invalid_argument("coordinate change is not square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = change.matrix[i][j];
  }
  return m;
}

}  // namespace

template <class F>
CoordinateChange<F> random_coordinate_change(const Ring<F>& ring, std::uint64_t seed) {
  const F& k = ring->field();
  const int n = ring->nvars();
  SplitMix64 rng(seed);
  CoordinateChange<F> change;
  change.seed = seed;
  while (true) {
    change.matrix.assign(n, std::vector<typename F::Element>(n, k.zero()));
    for (auto& row : change.matrix) {
      for (auto& entry : row) entry = k.random(rng);
    }
    if (!k.is_zero(determinant(to_dense(k, change)))) return change;
  }
}

template <class F>
CoordinateChange<F> identity_change(const Ring<F>& ring) {
  const F& k = ring->field();
  const int n = ring->nvars();
  CoordinateChange<F> change;
  change.matrix.assign(n, std::vector<typename F::Element>(n, k.zero()));
  for (int i = 0; i < n; ++i) change.matrix[i][i] = k.one();
  return change;
}

template <class F>
CoordinateChange<F> inverse_change(const Ring<F>& ring, const CoordinateChange<F>& change) {
  const F& k = ring->field();
  const std::size_t n = change.matrix.size();
  DenseMatrix<F> aug(k, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = change.matrix.at(i).at(j);
    aug(i, n + i) = k.one();
  }
  auto pivots = row_reduce_serial(aug);
  if (pivots.size() != n || pivots.back() != n - 1) throw DomainError("singular coordinate change");
  CoordinateChange<F> inv;
  inv.seed = change.seed;
  inv.matrix.assign(n, std::vector<typename F::Element>(n, k.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv.matrix[i][j] = aug(i, n + j);
  }
  return inv;
}

template <class F>
Polynomial<F> apply_change(const Polynomial<F>& f, const CoordinateChange<F>& change) {
  const int n = f.nvars();
  if (static_cast<int>(change.matrix.size()) != n) {
    throw std::invalid_argument("coordinate change does not match the ring");
  }
  std::vector<Polynomial<F>> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Term<F>> terms;
    for (int j = 0; j < n; ++j) terms.push_back({Monomial::variable(n, j), change.matrix[i].at(j)});
    images.push_back(Polynomial<F>::from_terms(f.ring(), std::move(terms)));
  }
  return f.substitute(images);
}

template <class F>
IdealHandle<F> apply_change(const IdealHandle<F>& ideal, const CoordinateChange<F>& change) {
  const F& k = ideal.ring()->field();
  if (static_cast<int>(change.matrix.size()) != ideal.nvars()) {
    throw std::invalid_argument("coordinate change does not match the ring");
  }
  if (k.is_zero(determinant(to_dense(k, change)))) throw DomainError("singular coordinate change");
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.gens()) gens.push_back(apply_change(g, change));
  return IdealHandle<F>(ideal.ring(), std::move(gens));
}

template <class F>
GinResult<F> gin(const IdealHandle<F>& ideal, const TermOrder& order, const GinOptions& options) {
  if (options.trials < 2) throw std::invalid_argument("gin needs at least two trials");
  GinResult<F> result;
  std::vector<MonomialIdeal> initials;

  auto run_trials = [&](int first, int last) {
    const int count = last - first;
    std::vector<std::optional<IdealHandle<F>>> ideals(count);
    std::vector<MonomialIdeal> ins(count);
    std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for num_threads(options.jobs) schedule(dynamic) if (options.jobs > 1)
    for (int t = 0; t < count; ++t) {
      try {
        auto change = random_coordinate_change(ideal.ring(), derive_seed(options.seed, first + t));
        ideals[t].emplace(apply_change(ideal, change));
        ins[t] = initial_ideal(*ideals[t], order, options.degree_cap);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (int t = 0; t < count; ++t) {
      result.seeds.push_back(derive_seed(options.seed, first + t));
      result.transformed.push_back(std::move(*ideals[t]));
      initials.push_back(std::move(ins[t]));
    }
  };

  run_trials(0, options.trials);
  auto all_equal = [&] {
    for (const auto& in : initials) {
      if (!(in == initials.front())) return false;
    }
    return true;
  };
  if (!all_equal()) run_trials(options.trials, options.trials + 1);
  result.trials_used = static_cast<int>(initials.size());
  result.agreed = all_equal();

  int best = -1, best_count = 0;
  for (int a = 0; a < result.trials_used; ++a) {
    int count = 0;
    for (const auto& in : initials) count += in == initials[a];
    if (count > best_count) {
      best = a;
      best_count = count;
    }
  }
  if (best_count * 2 <= result.trials_used) {
    throw AgreementFailure("gin trials disagree: no initial ideal shared by a majority of " +
                           std::to_string(result.trials_used) + " trials");
  }
  result.representative = best;
  result.gin = initials[best];
  result.borel = is_borel_fixed(result.gin);
  if (result.borel) result.regularity = result.gin.max_degree();
  return result;
}

#define GINLAB_GIN_INSTANTIATE(F)                                                               \
  template CoordinateChange<F> random_coordinate_change(const Ring<F>&, std::uint64_t);         \
  template CoordinateChange<F> identity_change(const Ring<F>&);                                 \
  template CoordinateChange<F> inverse_change(const Ring<F>&, const CoordinateChange<F>&);      \
  template Polynomial<F> apply_change(const Polynomial<F>&, const CoordinateChange<F>&);        \
  template IdealHandle<F> apply_change(const IdealHandle<F>&, const CoordinateChange<F>&);      \
  template GinResult<F> gin(const IdealHandle<F>&, const TermOrder&, const GinOptions&);

GINLAB_GIN_INSTANTIATE(PrimeField)
GINLAB_GIN_INSTANTIATE(RationalField)

}  // namespace ginlab
