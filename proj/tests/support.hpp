#pragma once

// Shared helpers for the test binaries: rings, random inputs and a
// Macaulay-matrix oracle that never touches Buchberger.

#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "ginlab/gin.hpp"
#include "ginlab/linalg.hpp"
#include "ginlab/rng.hpp"

namespace testing {

using namespace ginlab;
using Fp = PrimeField;
using QQ = RationalField;

template <class F = Fp>
Ring<F> ring(int n, F field = F{}) {
  return RingContext<F>::create(n, field);
}

template <class F>
IdealHandle<F> ideal(const Ring<F>& r, const std::string& text) {
  return IdealHandle<F>(r, parse_polynomial_list(r, text));
}

inline MonomialIdeal mono_ideal(int n, const std::string& text) {
  auto r = RingContext<QQ>::create(n);
  std::vector<Monomial> gens;
  for (const auto& p : parse_polynomial_list(r, text)) gens.push_back(p.terms().front().mono);
  return MonomialIdeal(n, std::move(gens));
}

template <class F>
Polynomial<F> random_form(const Ring<F>& r, int d, SplitMix64& rng, int max_terms = 0) {
  std::vector<Term<F>> terms;
  auto monos = monomials_of_degree(r->nvars(), d);
  for (const auto& m : monos) {
    if (max_terms > 0 && rng.below(monos.size()) >= static_cast<std::uint64_t>(max_terms)) continue;
    terms.push_back({m, r->field().random(rng)});
  }
  if (terms.empty()) terms.push_back({monos.front(), r->field().one()});
  return Polynomial<F>::from_terms(r, std::move(terms));
}

/// Borel-fixed ideal generated by the Borel closure of a few random monomials.
inline MonomialIdeal random_borel(int n, int max_deg, int count, SplitMix64& rng) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> stack;
  for (int k = 0; k < count; ++k) {
    std::vector<int> e(n, 0);
    const int d = 1 + static_cast<int>(rng.below(max_deg));
    for (int t = 0; t < d; ++t) ++e[rng.below(n)];
    stack.push_back(e);
  }
  std::vector<Monomial> gens;
  while (!stack.empty()) {
    auto e = stack.back();
    stack.pop_back();
    if (!seen.insert(e).second) continue;
    gens.emplace_back(n, e);
    for (int j = 1; j < n; ++j) {
      if (e[j] == 0) continue;
      for (int i = 0; i < j; ++i) {
        auto f = e;
        --f[j];
        ++f[i];
        stack.push_back(f);
      }
    }
  }
  return MonomialIdeal(n, std::move(gens));
}

/// dim (S/J)_d by counting standard monomials.
inline std::int64_t count_standard(const MonomialIdeal& j, int d) {
  std::int64_t c = 0;
  for (const auto& m : monomials_of_degree(j.nvars(), d)) c += !j.contains(m);
  return c;
}

/// Row-echelon span of I_d: all m * g with deg m + deg g = d.
template <class F>
class DegreeSpan {
 public:
  DegreeSpan(const IdealHandle<F>& ideal, int d)
      : field_(ideal.ring()->field()), monos_(monomials_of_degree(ideal.nvars(), d)), span_(field_, monos_.size()) {
    for (std::size_t j = 0; j < monos_.size(); ++j) index_[monos_[j]] = j;
    for (const auto& g : ideal.gens()) {
      if (g.degree() > d) continue;
      for (const auto& m : monomials_of_degree(ideal.nvars(), d - g.degree())) span_.insert(vec(g.times_monomial(m, field_.one())));
    }
  }

  std::size_t rank() const { return span_.rank(); }
  std::size_t dimension() const { return monos_.size(); }
  bool contains(const Polynomial<F>& f) const { return span_.contains(vec(f)); }

 private:
  std::vector<typename F::Element> vec(const Polynomial<F>& f) const {
    std::vector<typename F::Element> v(monos_.size(), field_.zero());
    for (const auto& t : f.terms()) v[index_.at(t.mono)] = t.coeff;
    return v;
  }

  F field_;
  std::vector<Monomial> monos_;
  std::unordered_map<Monomial, std::size_t> index_;
  EchelonBasis<F> span_;
};

/// dim (S/I)_d by linear algebra.
template <class F>
std::int64_t macaulay_hf(const IdealHandle<F>& ideal, int d) {
  DegreeSpan<F> s(ideal, d);
  return static_cast<std::int64_t>(s.dimension() - s.rank());
}

}  // namespace testing
