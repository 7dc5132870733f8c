#include "ginlab/partial_elim.hpp"

#include <algorithm>

#include "ginlab/errors.hpp"
#include "ginlab/gin.hpp"
#include "ginlab/linalg.hpp"

namespace ginlab {

namespace {

constexpr std::int64_t kOracleMaxColumns = 20000;

template <class F>
using Univariate = std::vector<typename F::Element>;  // coefficient of y^e at index e

template <class F>
void trim(const F& k, Univariate<F>& u) {
  while (!u.empty() && k.is_zero(u.back())) u.pop_back();
}

template <class F>
Univariate<F> remainder(const F& k, Univariate<F> a, const Univariate<F>& b) {
  auto inv = k.inv(b.back());
  while (a.size() >= b.size()) {
    auto c = k.mul(a.back(), inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = k.sub(a[i + shift], k.mul(c, b[i]));
    trim(k, a);
  }
  return a;
}

template <class F>
Univariate<F> gcd(const F& k, Univariate<F> a, Univariate<F> b) {
  trim(k, a);
  trim(k, b);
  while (!b.empty()) {
    auto r = remainder(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

template <class F>
Univariate<F> derivative(const F& k, const Univariate<F>& u) {
  Univariate<F> d;
  for (std::size_t e = 1; e < u.size(); ++e) d.push_back(k.mul(k.from_int(static_cast<std::int64_t>(e)), u[e]));
  trim(k, d);
  return d;
}

template <class F>
int count_once(const IdealHandle<F>& j, std::uint64_t seed, int degree_cap) {
  const F& k = j.ring()->field();
  auto change = random_coordinate_change(j.ring(), seed);
  IdealHandle<F> moved = apply_change(j, change);
  const auto& gb = moved.groebner_basis(TermOrder::elimination(3, TermOrder::revlex()), degree_cap);
  bool have = false;
  Univariate<F> g;
  int z_mult = 0;
  for (const auto& f : gb) {
    bool free_of_first = std::all_of(f.terms().begin(), f.terms().end(),
                                     [](const Term<F>& t) { return t.mono[0] == 0; });
    if (!free_of_first) continue;
    // binary form in x1, x2: dehomogenize at x2 = 1
    const int d = f.degree();
    Univariate<F> u(static_cast<std::size_t>(d) + 1, k.zero());
    for (const auto& t : f.terms()) u[t.mono[1]] = t.coeff;
    trim(k, u);
    int mult = d - (static_cast<int>(u.size()) - 1);
    if (!have) {
      g = u;
      z_mult = mult;
      have = true;
    } else {
      g = gcd(k, g, u);
      z_mult = std::min(z_mult, mult);
    }
  }
  if (!have) throw DomainError("projection has no elimination form; ideal is not a point set");
  int finite = static_cast<int>(g.size()) - 1;
  auto common = gcd(k, g, derivative(k, g));
  int repeated = static_cast<int>(common.size()) - 1;
  return finite - repeated + (z_mult > 0 ? 1 : 0);
}

}  // namespace

template <class F>
Ring<F> small_ring(const Ring<F>& ring) {
  if (ring->nvars() < 2) throw std::invalid_argument("partial elimination needs at least two variables");
  std::vector<std::string> names(ring->names().begin() + 1, ring->names().end());
  return RingContext<F>::create(ring->nvars() - 1, ring->field(), std::move(names));
}

Monomial lift_monomial(const Monomial& m, int x0_power) {
  std::vector<int> e{x0_power};
  auto rest = m.exponents();
  e.insert(e.end(), rest.begin(), rest.end());
  return Monomial(m.nvars() + 1, e);
}

Monomial drop_x0(const Monomial& m) {
  auto e = m.exponents();
  return Monomial(m.nvars() - 1, std::vector<int>(e.begin() + 1, e.end()));
}

template <class F>
X0Profile<F> x0_profile(const Polynomial<F>& f, const Ring<F>& small) {
  if (f.is_zero()) throw std::invalid_argument("x0 profile of the zero polynomial");
  int p = 0;
  for (const auto& t : f.terms()) p = std::max(p, t.mono[0]);
  std::vector<Term<F>> terms;
  for (const auto& t : f.terms()) {
    if (t.mono[0] == p) terms.push_back({drop_x0(t.mono), t.coeff});
  }
  return {p, Polynomial<F>::from_terms(small, std::move(terms))};
}

template <class F>
IdealHandle<F> PartialElimTower<F>::level(int p) const {
  return IdealHandle<F>(small, levels.at(std::min(p, p_max())));
}

template <class F>
PartialElimTower<F> partial_elim_ideals(const IdealHandle<F>& ideal, int p_max,
                                        const TermOrder& inner, int degree_cap) {
  const int n = ideal.nvars();
  PartialElimTower<F> tower{small_ring(ideal.ring()), inner, {}, {}, {}};
  TermOrder elim = TermOrder::elimination(n, inner);
  const auto& gb = ideal.groebner_basis(elim, degree_cap);
  std::vector<X0Profile<F>> profiles;
  int top = 0;
  for (const auto& g : gb) {
    profiles.push_back(x0_profile(g, tower.small));
    top = std::max(top, profiles.back().x0_degree);
  }
  if (p_max < 0) p_max = top;
  for (int p = 0; p <= p_max; ++p) {
    std::vector<Polynomial<F>> gp;
    for (const auto& pr : profiles) {
      if (pr.x0_degree <= p) gp.push_back(pr.initial_coefficient);
    }
    auto level = buchberger(gp, inner, degree_cap);
    if (level.empty()) {
      tower.initial.emplace_back(n - 1, std::vector<Monomial>{}, tower.small->names());
    } else {
      tower.initial.push_back(leading_monomial_ideal(level, inner));
    }
    tower.levels.push_back(std::move(level));
  }
  tower.big_initial = gb.empty() ? MonomialIdeal(n, {}, ideal.ring()->names())
                                 : leading_monomial_ideal(gb, elim);
  return tower;
}

MonomialIdeal monomial_partial_elim(const MonomialIdeal& j, int p) {
  std::vector<Monomial> gens;
  for (const auto& g : j.gens()) {
    if (g[0] <= p) gens.push_back(drop_x0(g));
  }
  std::vector<std::string> names(j.names().begin() + 1, j.names().end());
  return MonomialIdeal(j.nvars() - 1, std::move(gens), std::move(names));
}

template <class F>
bool check_decomposition(const PartialElimTower<F>& tower) {
  const int n = tower.small->nvars() + 1;
  std::vector<Monomial> gens;
  for (int p = 0; p <= tower.p_max(); ++p) {
    for (const auto& m : tower.initial[p].gens()) gens.push_back(lift_monomial(m, p));
  }
  MonomialIdeal sum(n, std::move(gens));
  return sum.contains(tower.big_initial) && tower.big_initial.contains(sum);
}

template <class F>
bool check_ascending(const PartialElimTower<F>& tower) {
  for (int p = 0; p < tower.p_max(); ++p) {
    for (const auto& g : tower.levels[p]) {
      if (!normal_form(g, tower.levels[p + 1], tower.inner).is_zero()) return false;
    }
  }
  return true;
}

template <class F>
bool check_commutation(const PartialElimTower<F>& tower) {
  for (int p = 0; p <= tower.p_max(); ++p) {
    if (!(monomial_partial_elim(tower.big_initial, p) == tower.initial[p])) return false;
  }
  return true;
}

template <class F>
std::vector<std::vector<Polynomial<F>>> pei_oracle(const IdealHandle<F>& ideal, int p,
                                                   int degree_bound, const TermOrder& inner) {
  const int n = ideal.nvars();
  const F& k = ideal.ring()->field();
  Ring<F> small = small_ring(ideal.ring());
  CompiledOrder inner_ord(inner, n - 1);
  std::vector<std::vector<Polynomial<F>>> pieces;
  for (int d = 0; d <= degree_bound; ++d) {
    const int top = d + p;
    if (count_monomials(n, top) > kOracleMaxColumns) {
      throw ResourceLimit("oracle degree " + std::to_string(top) + " too large");
    }
    auto cols = monomials_of_degree(n, top);
    std::sort(cols.begin(), cols.end(), [&](const Monomial& a, const Monomial& b) {
      if (a[0] != b[0]) return a[0] > b[0];
      return inner_ord.key(drop_x0(a)) > inner_ord.key(drop_x0(b));
    });
    std::unordered_map<Monomial, std::size_t> col_of;
    for (std::size_t c = 0; c < cols.size(); ++c) col_of[cols[c]] = c;
    DenseMatrix<F> mat(k, 0, cols.size());
    for (const auto& g : ideal.gens()) {
      if (g.degree() > top) continue;
      for (const auto& m : monomials_of_degree(n, top - g.degree())) {
        std::vector<typename F::Element> row(cols.size(), k.zero());
        for (const auto& t : g.terms()) row[col_of.at(t.mono * m)] = t.coeff;
        mat.append_row(row);
      }
    }
    auto pivots = row_reduce_serial(mat);
    std::vector<Polynomial<F>> spanning;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (cols[pivots[r]][0] > p) continue;
      std::vector<Term<F>> terms;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c][0] == p && !k.is_zero(mat(r, c))) terms.push_back({drop_x0(cols[c]), mat(r, c)});
      }
      if (!terms.empty()) spanning.push_back(Polynomial<F>::from_terms(small, std::move(terms)));
    }
    // reduce the spanning set to a basis of the degree-d piece
    auto small_cols = monomials_of_degree(n - 1, d);
    DenseMatrix<F> piece(k, 0, small_cols.size());
    for (const auto& f : spanning) {
      std::vector<typename F::Element> row(small_cols.size(), k.zero());
      for (std::size_t c = 0; c < small_cols.size(); ++c) row[c] = f.coefficient(small_cols[c]);
      piece.append_row(row);
    }
    auto piece_pivots = row_reduce_serial(piece);
    std::vector<Polynomial<F>> basis;
    for (std::size_t r = 0; r < piece_pivots.size(); ++r) {
      std::vector<Term<F>> terms;
      for (std::size_t c = 0; c < small_cols.size(); ++c) {
        if (!k.is_zero(piece(r, c))) terms.push_back({small_cols[c], piece(r, c)});
      }
      basis.push_back(Polynomial<F>::from_terms(small, std::move(terms)));
    }
    pieces.push_back(std::move(basis));
  }
  return pieces;
}

template <class F>
int count_distinct_points(const IdealHandle<F>& j, std::uint64_t seed, int degree_cap) {
  if (j.nvars() != 3) throw std::invalid_argument("point counting works in three variables");
  int dim = krull_dimension(j, degree_cap);
  if (dim != 1) {
    throw DomainError("expected a one-dimensional quotient (points in P^2), got dimension " +
                      std::to_string(dim));
  }
  int first = count_once(j, derive_seed(seed, 0), degree_cap);
  int second = count_once(j, derive_seed(seed, 1), degree_cap);
  if (first != second) {
    throw AgreementFailure("distinct point counts disagree across seeds: " +
                           std::to_string(first) + " vs " + std::to_string(second));
  }
  return first;
}

#define GINLAB_PEI_INSTANTIATE(F)                                                              \
  template Ring<F> small_ring(const Ring<F>&);                                                 \
  template X0Profile<F> x0_profile(const Polynomial<F>&, const Ring<F>&);                      \
  template struct PartialElimTower<F>;                                                         \
  template PartialElimTower<F> partial_elim_ideals(const IdealHandle<F>&, int, const TermOrder&, \
                                                   int);                                       \
  template bool check_decomposition(const PartialElimTower<F>&);                               \
  template bool check_ascending(const PartialElimTower<F>&);                                   \
  template bool check_commutation(const PartialElimTower<F>&);                                 \
  template std::vector<std::vector<Polynomial<F>>> pei_oracle(const IdealHandle<F>&, int, int, \
                                                              const TermOrder&);               \
  template int count_distinct_points(const IdealHandle<F>&, std::uint64_t, int);

GINLAB_PEI_INSTANTIATE(PrimeField)
GINLAB_PEI_INSTANTIATE(RationalField)

}  // namespace ginlab
