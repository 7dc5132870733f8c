#pragma once

#include <cstdint>
#include <vector>

#include "ginlab/groebner.hpp"

namespace ginlab {

/// k[x1..x_{n-1}] for a ring k[x0..x_{n-1}], keeping the big ring's names.
template <class F>
Ring<F> small_ring(const Ring<F>& ring);

/// Monomial of the small ring viewed in the big ring (x0-exponent `x0_power`).
Monomial lift_monomial(const Monomial& m, int x0_power = 0);
/// Drops the x0 exponent.
Monomial drop_x0(const Monomial& m);

/// f = f0 x0^p + (lower x0-degree terms).
template <class F>
struct X0Profile {
  int x0_degree;
  Polynomial<F> initial_coefficient;  // in the small ring
};

template <class F>
X0Profile<F> x0_profile(const Polynomial<F>& f, const Ring<F>& small);

/// K_0 ⊆ K_1 ⊆ ... ⊆ K_{p_max} in the small ring. Each level is stored as the
/// reduced Groebner basis (under `inner`) of the initial coefficients G_p.
template <class F>
struct PartialElimTower {
  Ring<F> small;
  TermOrder inner;
  std::vector<std::vector<Polynomial<F>>> levels;
  std::vector<MonomialIdeal> initial;  // in_inner(K_p)
  /// Initial ideal of I under the (1, r) product order the tower came from.
  MonomialIdeal big_initial;

  int p_max() const noexcept { return static_cast<int>(levels.size()) - 1; }
  IdealHandle<F> level(int p) const;
};

/// Partial elimination ideals from one Groebner basis under the elimination
/// order (1, r) with `inner` on x1..x_r. p_max < 0 selects the largest
/// x0-degree occurring in that basis.
template <class F>
PartialElimTower<F> partial_elim_ideals(const IdealHandle<F>& ideal, int p_max,
                                        const TermOrder& inner,
                                        int degree_cap = kDefaultDegreeCap);

/// K_p of a monomial ideal: generators with x0-exponent <= p, x0 removed.
MonomialIdeal monomial_partial_elim(const MonomialIdeal& j, int p);

/// in(I) = sum_p x0^p in(K_p) checked generator by generator, both directions.
template <class F>
bool check_decomposition(const PartialElimTower<F>& tower);

/// Every generator of K_p lies in K_{p+1}.
template <class F>
bool check_ascending(const PartialElimTower<F>& tower);

/// K_p(in I) = in K_p(I) for every level.
template <class F>
bool check_commutation(const PartialElimTower<F>& tower);

/// Degree-d pieces of K_p(I) for d = 0..degree_bound, straight from the
/// definition by per-degree linear algebra on I_{d+p}. Each piece is a list of
/// small-ring forms forming a basis.
template <class F>
std::vector<std::vector<Polynomial<F>>> pei_oracle(const IdealHandle<F>& ideal, int p,
                                                   int degree_bound, const TermOrder& inner);

/// Number of distinct points cut out by J in P^2 (J homogeneous in 3 variables
/// with one-dimensional quotient). Counts roots of the squarefree part of a
/// generic projection to P^1, for two seeds that must agree.
template <class F>
int count_distinct_points(const IdealHandle<F>& j, std::uint64_t seed,
                          int degree_cap = kDefaultDegreeCap);

#define GINLAB_PEI_EXTERN(F)                                                                    \
  extern template Ring<F> small_ring(const Ring<F>&);                                          \
  extern template X0Profile<F> x0_profile(const Polynomial<F>&, const Ring<F>&);               \
  extern template struct PartialElimTower<F>;                                                  \
  extern template PartialElimTower<F> partial_elim_ideals(const IdealHandle<F>&, int,          \
                                                          const TermOrder&, int);              \
  extern template bool check_decomposition(const PartialElimTower<F>&);                        \
  extern template bool check_ascending(const PartialElimTower<F>&);                            \
  extern template bool check_commutation(const PartialElimTower<F>&);                          \
  extern template std::vector<std::vector<Polynomial<F>>> pei_oracle(const IdealHandle<F>&,    \
                                                                     int, int, const TermOrder&); \
  extern template int count_distinct_points(const IdealHandle<F>&, std::uint64_t, int);

GINLAB_PEI_EXTERN(PrimeField)
GINLAB_PEI_EXTERN(RationalField)
#undef GINLAB_PEI_EXTERN

}  // namespace ginlab
