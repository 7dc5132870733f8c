#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "ginlab/monomial_ideal.hpp"
#include "ginlab/polynomial.hpp"
#include "ginlab/term_order.hpp"

namespace ginlab {

inline constexpr int kDefaultDegreeCap = 60;

/// Counters from one Buchberger run.
struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  int max_pair_degree = 0;
};

/// Reduced Groebner basis of homogeneous generators: monic, sorted by degree
/// and then ascending under `order`. Throws CapExceeded when an S-pair of degree
/// above `degree_cap` would be needed.
template <class F>
std::vector<Polynomial<F>> buchberger(const std::vector<Polynomial<F>>& gens, const TermOrder& order,
                                      int degree_cap = kDefaultDegreeCap,
                                      GroebnerStats* stats = nullptr);

/// Full division remainder: repeatedly cancels the greatest reducible monomial
/// using the first listed basis element whose leading monomial divides it.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis,
                          const TermOrder& order);

/// Homogeneous ideal with a per-order cache of reduced Groebner bases.
/// The cache admits concurrent readers; insertion is exclusive.
template <class F>
class IdealHandle {
 public:
  IdealHandle(Ring<F> ring, std::vector<Polynomial<F>> gens);

  const Ring<F>& ring() const noexcept { return ring_; }
  const std::vector<Polynomial<F>>& gens() const noexcept { return gens_; }
  int nvars() const noexcept { return ring_->nvars(); }

  /// Cached reduced Groebner basis under `order`.
  const std::vector<Polynomial<F>>& groebner_basis(const TermOrder& order,
                                                  int degree_cap = kDefaultDegreeCap) const;

  bool contains(const Polynomial<F>& f, const TermOrder& order,
                int degree_cap = kDefaultDegreeCap) const;

 private:
  struct Cache {
    std::shared_mutex mutex;
    std::map<std::vector<std::vector<std::int64_t>>,
             std::shared_ptr<const std::vector<Polynomial<F>>>>
        bases;
  };

  Ring<F> ring_;
  std::vector<Polynomial<F>> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Ideal generated by the leading monomials of the reduced basis.
template <class F>
MonomialIdeal initial_ideal(const IdealHandle<F>& ideal, const TermOrder& order,
                            int degree_cap = kDefaultDegreeCap);

/// Monomial ideal of leading monomials of a basis.
template <class F>
MonomialIdeal leading_monomial_ideal(const std::vector<Polynomial<F>>& basis,
                                     const TermOrder& order);

/// Hilbert function of S/I read off the initial ideal under `order`.
template <class F>
HilbertFunction hilbert_function(const IdealHandle<F>& ideal, const TermOrder& order, int bound,
                                 int degree_cap = kDefaultDegreeCap);

/// Equality of ideals via their reduced Groebner bases.
template <class F>
bool ideal_equal(const IdealHandle<F>& a, const IdealHandle<F>& b, const TermOrder& order,
                 int degree_cap = kDefaultDegreeCap);

/// Krull dimension of S/I from the Hilbert series of an initial ideal;
/// -1 for the unit ideal.
template <class F>
int krull_dimension(const IdealHandle<F>& ideal, int degree_cap = kDefaultDegreeCap);

#define GINLAB_GROEBNER_EXTERN(F)                                                               \
  extern template std::vector<Polynomial<F>> buchberger(const std::vector<Polynomial<F>>&,      \
                                                        const TermOrder&, int, GroebnerStats*); \
  extern template Polynomial<F> normal_form(const Polynomial<F>&,                               \
                                            const std::vector<Polynomial<F>>&, const TermOrder&); \
  extern template class IdealHandle<F>;                                                         \
  extern template MonomialIdeal initial_ideal(const IdealHandle<F>&, const TermOrder&, int);    \
  extern template MonomialIdeal leading_monomial_ideal(const std::vector<Polynomial<F>>&,       \
                                                       const TermOrder&);                       \
  extern template HilbertFunction hilbert_function(const IdealHandle<F>&, const TermOrder&, int, \
                                                   int);                                        \
  extern template bool ideal_equal(const IdealHandle<F>&, const IdealHandle<F>&,                \
                                   const TermOrder&, int);                                      \
  extern template int krull_dimension(const IdealHandle<F>&, int);

GINLAB_GROEBNER_EXTERN(PrimeField)
GINLAB_GROEBNER_EXTERN(RationalField)
#undef GINLAB_GROEBNER_EXTERN

}  // namespace ginlab
