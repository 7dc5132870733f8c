#include "ginlab/segments.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <gmpxx.h>

#include "ginlab/errors.hpp"

namespace ginlab {

std::vector<Monomial> segment_space(int nvars, int d, std::int64_t u, const TermOrder& order) {
  auto monos = monomials_of_degree(nvars, d);
  if (u < 0 || u > static_cast<std::int64_t>(monos.size())) {
    throw std::invalid_argument("segment size " + std::to_string(u) + " out of range for degree " +
                                std::to_string(d));
  }
  CompiledOrder ord(order, nvars);
  std::stable_sort(monos.begin(), monos.end(),
                   [&](const Monomial& a, const Monomial& b) { return ord.key(a) > ord.key(b); });
  monos.resize(static_cast<std::size_t>(u));
  return monos;
}

std::int64_t quotient_dim(const HilbertFunction& hf, int d) {
  if (d <= hf.bound()) return hf[d];
  if (!hf.stable_value) throw std::out_of_range("Hilbert function unknown past its bound");
  return *hf.stable_value;
}

bool SegmentIdeal::contains(const Monomial& m) const {
  if (m.degree() >= static_cast<int>(spaces.size())) return ideal.contains(m);
  const auto& s = spaces[m.degree()];
  return std::find(s.begin(), s.end(), m) != s.end();
}

SegmentIdeal segment_ideal_of(const HilbertFunction& hf, const TermOrder& order, int nvars, int bound) {
  SegmentIdeal out;
  std::vector<Monomial> all;
  for (int d = 0; d <= bound; ++d) {
    const auto size = count_monomials(nvars, d) - quotient_dim(hf, d);
    out.spaces.push_back(segment_space(nvars, d, size, order));
    all.insert(all.end(), out.spaces.back().begin(), out.spaces.back().end());
  }
  out.is_ideal = true;
  for (int d = 0; d < bound && out.is_ideal; ++d) {
    std::unordered_set<Monomial> next(out.spaces[d + 1].begin(), out.spaces[d + 1].end());
    for (const auto& m : out.spaces[d]) {
      for (int v = 0; v < nvars && out.is_ideal; ++v) {
        if (!next.count(m * Monomial::variable(nvars, v))) out.is_ideal = false;
      }
    }
  }
  out.ideal = MonomialIdeal(nvars, std::move(all));
  return out;
}

MonomialIdeal lex_ideal_of_hf(const HilbertFunction& hf, int nvars, int bound) {
  auto seg = segment_ideal_of(hf, TermOrder::lex(), nvars, bound);
  if (!seg.is_ideal) throw DomainError("lex segments do not form an ideal: not a Hilbert function");
  return seg.ideal;
}

namespace {

class BorelSearch {
 public:
  BorelSearch(const HilbertFunction& hf, int nvars, int bound, std::int64_t max_nodes)
      : hf_(hf), n_(nvars), bound_(bound), max_nodes_(max_nodes) {
    for (int d = 0; d <= bound; ++d) {
      monos_.push_back(monomials_of_degree(nvars, d));
      std::unordered_map<Monomial, std::size_t> idx;
      for (std::size_t i = 0; i < monos_.back().size(); ++i) idx[monos_.back()[i]] = i;
      index_.push_back(std::move(idx));
      const auto need = count_monomials(nvars, d) - quotient_dim(hf, d);
      if (need < 0 || need > count_monomials(nvars, d)) {
        throw std::invalid_argument("Hilbert function out of range in degree " + std::to_string(d));
      }
      need_.push_back(need);
    }
    chosen_.resize(bound + 1);
  }

  std::vector<MonomialIdeal> run() {
    degree(0);
    return std::move(found_);
  }

 private:
  // Chooses the degree-d part, given chosen_[d-1].
  void degree(int d) {
    if (d > bound_) {
      finish();
      return;
    }
    std::vector<char> in(monos_[d].size(), 0);
    std::int64_t count = 0;
    if (d > 0) {
      for (std::size_t i = 0; i < monos_[d - 1].size(); ++i) {
        if (!chosen_[d - 1][i]) continue;
        for (int v = 0; v < n_; ++v) {
          auto j = index_[d].at(monos_[d - 1][i] * Monomial::variable(n_, v));
          if (!in[j]) {
            in[j] = 1;
            ++count;
          }
        }
      }
    }
    if (count > need_[d]) return;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (!in[i]) free.push_back(i);
    }
    chosen_[d] = std::move(in);
    extend(d, free, 0, need_[d] - count);
  }

  // Decides the free monomials free[k..] in lex-descending order.
  void extend(int d, const std::vector<std::size_t>& free, std::size_t k, std::int64_t left) {
    if (++nodes_ > max_nodes_) throw ResourceLimit("Borel enumeration exceeded its node budget");
    if (left == 0) {
      degree(d + 1);
      return;
    }
    if (static_cast<std::int64_t>(free.size() - k) < left) return;
    const std::size_t i = free[k];
    if (parents_in(d, monos_[d][i])) {
      chosen_[d][i] = 1;
      extend(d, free, k + 1, left - 1);
      chosen_[d][i] = 0;
    }
    extend(d, free, k + 1, left);
  }

  // Elementary Borel moves x_{v+1} -> x_v all land in the chosen set.
  bool parents_in(int d, const Monomial& m) const {
    for (int v = 0; v + 1 < n_; ++v) {
      if (m[v + 1] == 0) continue;
      auto parent = m.with_exponent(v + 1, m[v + 1] - 1).with_exponent(v, m[v] + 1);
      if (!chosen_[d][index_[d].at(parent)]) return false;
    }
    return true;
  }

  void finish() {
    std::vector<Monomial> gens;
    for (int d = 0; d <= bound_; ++d) {
      for (std::size_t i = 0; i < monos_[d].size(); ++i) {
        if (chosen_[d][i]) gens.push_back(monos_[d][i]);
      }
    }
    MonomialIdeal j(n_, std::move(gens));
    auto series = hilbert_series(j);
    for (int d = 0; d <= bound_; ++d) {
      if (series.value(d) != hf_[d]) return;
    }
    if (hf_.stable_value) {
      const bool ok = *hf_.stable_value == 0 ? series.dimension <= 0
                                             : series.dimension == 1 && series.degree == *hf_.stable_value;
      if (!ok) return;
    }
    found_.push_back(std::move(j));
  }

  const HilbertFunction& hf_;
  int n_;
  int bound_;
  std::int64_t max_nodes_;
  std::int64_t nodes_ = 0;
  std::vector<std::vector<Monomial>> monos_;
  std::vector<std::unordered_map<Monomial, std::size_t>> index_;
  std::vector<std::int64_t> need_;
  std::vector<std::vector<char>> chosen_;
  std::vector<MonomialIdeal> found_;
};

// Inside/outside split of J in degree d.
std::pair<std::vector<Monomial>, std::vector<Monomial>> split(const MonomialIdeal& j, int d) {
  std::pair<std::vector<Monomial>, std::vector<Monomial>> out;
  for (const auto& m : monomials_of_degree(j.nvars(), d)) (j.contains(m) ? out.first : out.second).push_back(m);
  return out;
}

std::pair<int, int> default_range(const MonomialIdeal& j, int lo, int hi) {
  if (lo < 0) lo = 1;
  if (hi < 0) hi = std::max(j.max_degree(), 0) + 1;
  return {lo, hi};
}

using IntVec = std::vector<mpz_class>;

mpz_class floor_div(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class ceil_div(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

struct Row {
  IntVec a;
  bool strict;
};

void normalise(IntVec& a) {
  mpz_class g = 0;
  for (const auto& x : a) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : a) x /= g;
  }
}

// Deduplicates; a strict copy of a row subsumes the weak one.
std::vector<Row> dedupe(std::vector<Row> rows) {
  std::map<IntVec, bool> seen;
  for (auto& r : rows) {
    normalise(r.a);
    auto [it, fresh] = seen.emplace(std::move(r.a), r.strict);
    if (!fresh) it->second = it->second || r.strict;
  }
  std::vector<Row> out;
  for (auto& [a, strict] : seen) out.push_back({a, strict});
  return out;
}

}  // namespace

std::vector<MonomialIdeal> enumerate_borel_by_hf(const HilbertFunction& hf, int nvars, int bound,
                                                 std::int64_t max_nodes) {
  if (bound > hf.bound() && !hf.stable_value) throw std::invalid_argument("bound exceeds the Hilbert function");
  return BorelSearch(hf, nvars, bound, max_nodes).run();
}

bool is_segment(const MonomialIdeal& j, const TermOrder& order, int lo, int hi) {
  CompiledOrder ord(order, j.nvars());
  for (int d = lo; d <= hi; ++d) {
    auto [in, out] = split(j, d);
    if (in.empty() || out.empty()) continue;
    CompiledOrder::Key low = ord.key(in.front());
    for (const auto& m : in) low = std::min(low, ord.key(m));
    for (const auto& m : out) {
      if (ord.key(m) >= low) return false;
    }
  }
  return true;
}

bool verify_weight(const MonomialIdeal& j, const std::vector<std::int64_t>& w, int lo, int hi) {
  if (static_cast<int>(w.size()) != j.nvars()) throw std::invalid_argument("weight length mismatch");
  auto weigh = [&](const Monomial& m) {
    std::int64_t s = 0;
    for (int i = 0; i < j.nvars(); ++i) s += w[i] * m[i];
    return s;
  };
  for (int d = lo; d <= hi; ++d) {
    auto [in, out] = split(j, d);
    if (in.empty() || out.empty()) continue;
    std::int64_t low = weigh(in.front());
    for (const auto& m : in) low = std::min(low, weigh(m));
    for (const auto& m : out) {
      if (weigh(m) >= low) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::int64_t>> fourier_motzkin(const std::vector<LinearConstraint>& system,
                                                         int nvars, std::size_t max_constraints) {
  std::vector<Row> rows;
  for (const auto& c : system) {
    if (static_cast<int>(c.coeffs.size()) != nvars) throw std::invalid_argument("constraint length mismatch");
    IntVec a;
    for (auto x : c.coeffs) a.emplace_back(static_cast<long>(x));
    rows.push_back({std::move(a), c.strict});
  }
  // levels[k] holds the system in which variables 0..k-1 are eliminated
  std::vector<std::vector<Row>> levels{dedupe(std::move(rows))};
  for (int k = 0; k < nvars; ++k) {
    const auto& cur = levels.back();
    std::vector<Row> next, pos, neg;
    for (const auto& r : cur) {
      const int s = sgn(r.a[k]);
      (s > 0 ? pos : s < 0 ? neg : next).push_back(r);
    }
    if (next.size() + pos.size() * neg.size() > max_constraints) {
      throw ResourceLimit("Fourier-Motzkin step exceeds " + std::to_string(max_constraints) + " constraints");
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        IntVec a(nvars);
        mpz_class cp = -q.a[k], cq = p.a[k];
        for (int i = 0; i < nvars; ++i) a[i] = cp * p.a[i] + cq * q.a[i];
        next.push_back({std::move(a), p.strict || q.strict});
      }
    }
    levels.push_back(dedupe(std::move(next)));
  }
  for (const auto& r : levels.back()) {
    if (r.strict) return std::nullopt;  // 0 > 0
  }

  std::vector<mpq_class> w(nvars, 0);
  for (int k = nvars - 1; k >= 0; --k) {
    std::optional<mpq_class> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& r : levels[k]) {
      if (r.a[k] == 0) continue;
      mpq_class rest = 0;
      for (int i = k + 1; i < nvars; ++i) rest += r.a[i] * w[i];
      mpq_class bound = -rest / mpq_class(r.a[k]);
      if (r.a[k] > 0) {
        if (!lo || bound > *lo || (bound == *lo && r.strict)) {
          lo = bound;
          lo_strict = r.strict;
        }
      } else if (!hi || bound < *hi || (bound == *hi && r.strict)) {
        hi = bound;
        hi_strict = r.strict;
      }
    }
    mpq_class v;
    if (lo && hi) {
      mpz_class c = ceil_div(*lo);
      if (c == *lo && lo_strict) c += 1;
      if (c < *hi || (c == *hi && !hi_strict)) {
        v = c;
      } else {
        v = *lo == *hi ? *lo : mpq_class((*lo + *hi) / 2);
      }
    } else if (lo) {
      mpz_class c = ceil_div(*lo);
      v = (c == *lo && lo_strict) ? mpq_class(c + 1) : mpq_class(c);
    } else if (hi) {
      mpz_class f = floor_div(*hi);
      v = (f == *hi && hi_strict) ? mpq_class(f - 1) : mpq_class(f);
    } else {
      v = 1;
    }
    v.canonicalize();
    w[k] = v;
  }

  mpz_class l = 1;
  for (const auto& x : w) l = lcm(l, x.get_den());
  IntVec scaled;
  for (const auto& x : w) scaled.push_back(mpz_class(mpq_class(x * l)));
  normalise(scaled);
  std::vector<std::int64_t> out;
  for (const auto& x : scaled) {
    if (!x.fits_slong_p()) throw ResourceLimit("witness does not fit in 64 bits");
    out.push_back(x.get_si());
  }
  return out;
}

WeightWitness segment_witness(const MonomialIdeal& j, int lo, int hi) {
  std::tie(lo, hi) = default_range(j, lo, hi);
  const int n = j.nvars();
  std::vector<LinearConstraint> system;
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    system.push_back({e, true});
  }
  std::set<std::vector<std::int64_t>> seen;
  for (int d = lo; d <= hi; ++d) {
    auto [in, out] = split(j, d);
    for (const auto& m : in) {
      for (const auto& o : out) {
        std::vector<std::int64_t> a(n);
        for (int i = 0; i < n; ++i) a[i] = m[i] - o[i];
        if (seen.insert(a).second) system.push_back({std::move(a), true});
      }
    }
  }
  WeightWitness result;
  result.constraints = system.size();
  if (auto w = fourier_motzkin(system, n)) {
    result.feasible = true;
    result.weight = std::move(*w);
  }
  return result;
}

}  // namespace ginlab
