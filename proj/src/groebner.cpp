#include "ginlab/groebner.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "ginlab/errors.hpp"

namespace ginlab {

namespace {

// Degree-d monomials above this count make the dense accumulator impractical.
constexpr std::int64_t kMaxDenseWidth = 8'000'000;

using Key = CompiledOrder::Key;

template <class F>
struct BasisElement {
  std::vector<Monomial> monos;  // descending under the order; monos[0] is the leading monomial
  std::vector<typename F::Element> coeffs;  // coeffs[0] == 1
  int degree = 0;
  const Monomial& lm() const { return monos.front(); }
};

struct Pair {
  int i;
  int j;
  Monomial lcm;
  Key key;
};

// All monomials of one degree, ordered descending, with a position lookup and
// a per-position cache of the first basis element whose leading monomial divides.
struct DegreeTable {
  std::vector<Monomial> monos;
  std::vector<std::uint32_t> pos_of_rank;
  std::vector<int> reducer;
  std::vector<int> checked;

  std::size_t pos(const Monomial& m) const { return pos_of_rank[combinatorial_rank(m)]; }
};

template <class F>
class Kernel {
 public:
  using E = typename F::Element;

  Kernel(Ring<F> ring, const TermOrder& order, int cap, GroebnerStats* stats)
      : ring_(std::move(ring)), k_(ring_->field()), ord_(order, ring_->nvars()), cap_(cap),
        stats_(stats) {}

  std::vector<Polynomial<F>> run(std::vector<Polynomial<F>> gens) {
    std::stable_sort(gens.begin(), gens.end(),
                     [](const auto& a, const auto& b) { return a.degree() < b.degree(); });
    std::size_t next_gen = 0;
    while (next_gen < gens.size() || !pairs_.empty()) {
      int d = std::numeric_limits<int>::max();
      if (next_gen < gens.size()) d = gens[next_gen].degree();
      for (const auto& p : pairs_) d = std::min(d, p.lcm.degree());
      if (d > cap_) throw CapExceeded(d, cap_);
      for (; next_gen < gens.size() && gens[next_gen].degree() == d; ++next_gen) {
        load(gens[next_gen], d);
        reduce_and_insert(d);
      }
      std::vector<Pair> batch;
      auto split = std::stable_partition(pairs_.begin(), pairs_.end(),
                                         [d](const Pair& p) { return p.lcm.degree() != d; });
      batch.assign(split, pairs_.end());
      pairs_.erase(split, pairs_.end());
      std::stable_sort(batch.begin(), batch.end(),
                       [](const Pair& a, const Pair& b) { return a.key < b.key; });
      for (const auto& p : batch) {
        if (stats_) {
          ++stats_->pairs_reduced;
          stats_->max_pair_degree = std::max(stats_->max_pair_degree, d);
        }
        load_spair(p, d);
        if (!reduce_and_insert(d) && stats_) ++stats_->zero_reductions;
      }
    }
    return finish();
  }

 private:
  DegreeTable& table(int d) {
    if (static_cast<int>(tables_.size()) <= d) tables_.resize(d + 1);
    DegreeTable& t = tables_[d];
    if (t.monos.empty()) {
      const int n = ring_->nvars();
      if (count_monomials(n, d) > kMaxDenseWidth) {
        throw ResourceLimit("degree " + std::to_string(d) + " has too many monomials in " +
                            std::to_string(n) + " variables");
      }
      t.monos = monomials_of_degree(n, d);
      std::vector<Key> keys(t.monos.size());
      for (std::size_t i = 0; i < t.monos.size(); ++i) keys[i] = ord_.key(t.monos[i]);
      std::vector<std::uint32_t> idx(t.monos.size());
      std::iota(idx.begin(), idx.end(), 0u);
      std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return keys[a] > keys[b]; });
      std::vector<Monomial> sorted(t.monos.size());
      for (std::size_t i = 0; i < idx.size(); ++i) sorted[i] = t.monos[idx[i]];
      t.monos = std::move(sorted);
      t.pos_of_rank.assign(t.monos.size(), 0);
      for (std::size_t i = 0; i < t.monos.size(); ++i) {
        t.pos_of_rank[combinatorial_rank(t.monos[i])] = static_cast<std::uint32_t>(i);
      }
      t.reducer.assign(t.monos.size(), -1);
      t.checked.assign(t.monos.size(), 0);
    }
    return t;
  }

  int find_reducer(DegreeTable& t, std::size_t pos) {
    if (t.reducer[pos] >= 0) return t.reducer[pos];
    const Monomial& m = t.monos[pos];
    const int size = static_cast<int>(basis_.size());
    for (int i = t.checked[pos]; i < size; ++i) {
      if (basis_[i].degree <= m.degree() && basis_[i].lm().divides(m)) {
        t.reducer[pos] = i;
        t.checked[pos] = size;
        return i;
      }
    }
    t.checked[pos] = size;
    return -1;
  }

  void prepare(int d) {
    DegreeTable& t = table(d);
    acc_.assign(t.monos.size(), k_.zero());
  }

  void load(const Polynomial<F>& f, int d) {
    prepare(d);
    DegreeTable& t = tables_[d];
    for (const auto& term : f.terms()) acc_[t.pos(term.mono)] = term.coeff;
  }

  void load_spair(const Pair& p, int d) {
    prepare(d);
    DegreeTable& t = tables_[d];
    add_multiple(t, basis_[p.i], p.lcm / basis_[p.i].lm(), k_.one());
    add_multiple(t, basis_[p.j], p.lcm / basis_[p.j].lm(), k_.neg(k_.one()));
  }

  // acc += c * q * g
  void add_multiple(const DegreeTable& t, const BasisElement<F>& g, const Monomial& q, const E& c) {
    for (std::size_t s = 0; s < g.monos.size(); ++s) {
      auto& slot = acc_[t.pos(g.monos[s] * q)];
      slot = k_.add(slot, k_.mul(c, g.coeffs[s]));
    }
  }

  // Full reduction of acc_ from position `start`; positions before it are left alone.
  void reduce_acc(DegreeTable& t, std::size_t start) {
    for (std::size_t pos = start; pos < acc_.size(); ++pos) {
      if (k_.is_zero(acc_[pos])) continue;
      int r = find_reducer(t, pos);
      if (r < 0) continue;
      const BasisElement<F>& g = basis_[r];
      E c = k_.neg(acc_[pos]);
      add_multiple(t, g, t.monos[pos] / g.lm(), c);
    }
  }

  BasisElement<F> extract(const DegreeTable& t, int d) {
    BasisElement<F> out;
    out.degree = d;
    E inv = k_.one();
    for (std::size_t pos = 0; pos < acc_.size(); ++pos) {
      if (k_.is_zero(acc_[pos])) continue;
      if (out.monos.empty()) inv = k_.inv(acc_[pos]);
      out.monos.push_back(t.monos[pos]);
      out.coeffs.push_back(k_.mul(acc_[pos], inv));
    }
    return out;
  }

  bool reduce_and_insert(int d) {
    DegreeTable& t = tables_[d];
    reduce_acc(t, 0);
    BasisElement<F> h = extract(t, d);
    if (h.monos.empty()) return false;
    basis_.push_back(std::move(h));
    update(static_cast<int>(basis_.size()) - 1);
    return true;
  }

  // Gebauer–Möller installation of the pairs created by basis element t.
  void update(int t) {
    const Monomial& lt = basis_[t].lm();
    std::vector<Pair> fresh;
    fresh.reserve(t);
    for (int i = 0; i < t; ++i) {
      Monomial l = basis_[i].lm().lcm(lt);
      fresh.push_back({i, t, l, ord_.key(l)});
    }
    std::vector<char> alive(fresh.size(), 1);
    std::vector<char> kept(fresh.size(), 0);
    // chain criterion among the new pairs: drop (i,t) if another surviving new
    // pair has an lcm dividing lcm(i,t), keeping one representative per lcm
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      alive[a] = 0;
      bool coprime = basis_[fresh[a].i].lm().coprime(lt);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = 0; b < fresh.size() && !dominated; ++b) {
          if (b != a && (alive[b] || kept[b]) && fresh[b].lcm.divides(fresh[a].lcm)) {
            dominated = true;
          }
        }
      }
      if (coprime || !dominated) kept[a] = 1;
    }
    // chain criterion on the old pairs
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lt.divides(p.lcm)) return false;
      Monomial li = basis_[p.i].lm().lcm(lt);
      Monomial lj = basis_[p.j].lm().lcm(lt);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    // product criterion
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (kept[a] && !basis_[fresh[a].i].lm().coprime(lt)) {
        pairs_.push_back(fresh[a]);
        if (stats_) ++stats_->pairs_created;
      }
    }
  }

  std::vector<Polynomial<F>> finish() {
    // Tail-reduce each element against the whole basis; its leading monomial
    // is divisible by no other leading monomial, so it survives unchanged.
    std::vector<BasisElement<F>> reduced;
    reduced.reserve(basis_.size());
    for (const auto& g : basis_) {
      DegreeTable& t = table(g.degree);
      acc_.assign(t.monos.size(), k_.zero());
      for (std::size_t s = 0; s < g.monos.size(); ++s) acc_[t.pos(g.monos[s])] = g.coeffs[s];
      reduce_acc(t, t.pos(g.lm()) + 1);
      reduced.push_back(extract(t, g.degree));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      return ord_.key(a.lm()) < ord_.key(b.lm());
    });
    std::vector<Polynomial<F>> out;
    out.reserve(reduced.size());
    for (auto& g : reduced) {
      std::vector<Term<F>> terms;
      terms.reserve(g.monos.size());
      for (std::size_t s = 0; s < g.monos.size(); ++s) terms.push_back({g.monos[s], g.coeffs[s]});
      out.push_back(Polynomial<F>::from_terms(ring_, std::move(terms)));
    }
    return out;
  }

  Ring<F> ring_;
  F k_;
  CompiledOrder ord_;
  int cap_;
  GroebnerStats* stats_;
  std::vector<BasisElement<F>> basis_;
  std::vector<Pair> pairs_;
  std::vector<DegreeTable> tables_;
  std::vector<E> acc_;
};

}  // namespace

template <class F>
std::vector<Polynomial<F>> buchberger(const std::vector<Polynomial<F>>& gens, const TermOrder& order,
                                      int degree_cap, GroebnerStats* stats) {
  std::vector<Polynomial<F>> input;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw std::invalid_argument("Groebner input must be homogeneous");
    if (!g.ring()->same_as(*gens.front().ring())) {
      throw std::invalid_argument("generators from different rings");
    }
    input.push_back(g);
  }
  if (input.empty()) return {};
  const Ring<F>& ring = input.front().ring();
  for (const auto& g : input) {
    if (g.is_unit()) return {Polynomial<F>::constant(ring, ring->field().one())};
  }
  Kernel<F> kernel(ring, order, degree_cap, stats);
  return kernel.run(std::move(input));
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis,
                          const TermOrder& order) {
  const F& k = f.field();
  CompiledOrder ord(order, f.nvars());
  struct Lead {
    Monomial mono;
    typename F::Element inv;
  };
  std::vector<Lead> leads;
  for (const auto& g : basis) {
    if (g.is_zero()) throw std::invalid_argument("zero polynomial in a division basis");
    auto lt = g.leading_term(ord);
    leads.push_back({lt.mono, k.inv(lt.coeff)});
  }
  std::map<Key, Term<F>, std::greater<Key>> work;
  for (const auto& t : f.terms()) work.emplace(ord.key(t.mono), t);
  std::vector<Term<F>> remainder;
  while (!work.empty()) {
    auto it = work.begin();
    Term<F> top = it->second;
    work.erase(it);
    std::size_t r = 0;
    while (r < leads.size() && !leads[r].mono.divides(top.mono)) ++r;
    if (r == leads.size()) {
      remainder.push_back(std::move(top));
      continue;
    }
    Monomial q = top.mono / leads[r].mono;
    auto c = k.mul(top.coeff, leads[r].inv);
    for (const auto& t : basis[r].terms()) {
      Monomial m = t.mono * q;
      if (m == top.mono) continue;
      auto delta = k.neg(k.mul(c, t.coeff));
      auto [slot, inserted] = work.try_emplace(ord.key(m), Term<F>{m, delta});
      if (!inserted) {
        slot->second.coeff = k.add(slot->second.coeff, delta);
        if (k.is_zero(slot->second.coeff)) work.erase(slot);
      }
    }
  }
  return Polynomial<F>::from_terms(f.ring(), std::move(remainder));
}

template <class F>
IdealHandle<F>::IdealHandle(Ring<F> ring, std::vector<Polynomial<F>> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (!g.ring()->same_as(*ring_)) throw std::invalid_argument("generator from another ring");
    if (!g.is_homogeneous()) throw std::invalid_argument("ideal generators must be homogeneous");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

template <class F>
const std::vector<Polynomial<F>>& IdealHandle<F>::groebner_basis(const TermOrder& order,
                                                                 int degree_cap) const {
  auto rows = CompiledOrder(order, nvars()).rows();
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->bases.find(rows);
    if (it != cache_->bases.end()) return *it->second;
  }
  auto basis = std::make_shared<const std::vector<Polynomial<F>>>(
      buchberger(gens_, order, degree_cap));
  std::unique_lock lock(cache_->mutex);
  auto [it, inserted] = cache_->bases.emplace(std::move(rows), std::move(basis));
  return *it->second;
}

template <class F>
bool IdealHandle<F>::contains(const Polynomial<F>& f, const TermOrder& order,
                              int degree_cap) const {
  return normal_form(f, groebner_basis(order, degree_cap), order).is_zero();
}

template <class F>
MonomialIdeal leading_monomial_ideal(const std::vector<Polynomial<F>>& basis,
                                     const TermOrder& order) {
  if (basis.empty()) throw std::invalid_argument("empty basis has no ring");
  CompiledOrder ord(order, basis.front().nvars());
  std::vector<Monomial> lms;
  for (const auto& g : basis) lms.push_back(g.leading_term(ord).mono);
  return MonomialIdeal(basis.front().nvars(), std::move(lms), basis.front().ring()->names());
}

template <class F>
MonomialIdeal initial_ideal(const IdealHandle<F>& ideal, const TermOrder& order, int degree_cap) {
  const auto& gb = ideal.groebner_basis(order, degree_cap);
  if (gb.empty()) return MonomialIdeal(ideal.nvars(), {}, ideal.ring()->names());
  return leading_monomial_ideal(gb, order);
}

template <class F>
HilbertFunction hilbert_function(const IdealHandle<F>& ideal, const TermOrder& order, int bound,
                                 int degree_cap) {
  return monomial_hilbert(initial_ideal(ideal, order, degree_cap), bound);
}

template <class F>
bool ideal_equal(const IdealHandle<F>& a, const IdealHandle<F>& b, const TermOrder& order,
                 int degree_cap) {
  if (!a.ring()->same_as(*b.ring())) throw std::invalid_argument("ideals from different rings");
  return a.groebner_basis(order, degree_cap) == b.groebner_basis(order, degree_cap);
}

template <class F>
int krull_dimension(const IdealHandle<F>& ideal, int degree_cap) {
  return hilbert_series(initial_ideal(ideal, TermOrder::revlex(), degree_cap)).dimension;
}

#define GINLAB_GROEBNER_INSTANTIATE(F)                                                         \
  template std::vector<Polynomial<F>> buchberger(const std::vector<Polynomial<F>>&,            \
                                                 const TermOrder&, int, GroebnerStats*);       \
  template Polynomial<F> normal_form(const Polynomial<F>&, const std::vector<Polynomial<F>>&,  \
                                     const TermOrder&);                                        \
  template class IdealHandle<F>;                                                               \
  template MonomialIdeal initial_ideal(const IdealHandle<F>&, const TermOrder&, int);          \
  template MonomialIdeal leading_monomial_ideal(const std::vector<Polynomial<F>>&,             \
                                                const TermOrder&);                             \
  template HilbertFunction hilbert_function(const IdealHandle<F>&, const TermOrder&, int, int); \
  template bool ideal_equal(const IdealHandle<F>&, const IdealHandle<F>&, const TermOrder&,    \
                            int);                                                              \
  template int krull_dimension(const IdealHandle<F>&, int);

GINLAB_GROEBNER_INSTANTIATE(PrimeField)
GINLAB_GROEBNER_INSTANTIATE(RationalField)

}  // namespace ginlab
