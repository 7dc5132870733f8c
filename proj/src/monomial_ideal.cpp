#include "ginlab/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "ginlab/errors.hpp"

namespace ginlab {

namespace {

using Series = std::vector<std::int64_t>;

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.packed() > b.packed();
}

Series mul(const Series& a, const Series& b) {
  Series r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

void add_shifted(Series& acc, const Series& b, std::size_t shift) {
  if (acc.size() < b.size() + shift) acc.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) acc[i + shift] += b[i];
}

void trim(Series& s) {
  while (s.size() > 1 && s.back() == 0) s.pop_back();
}

// K-polynomial of S/J for a minimal generating set.
Series numerator(std::vector<Monomial> gens) {
  if (gens.empty()) return {1};
  bool coprime = true;
  for (std::size_t a = 0; a < gens.size() && coprime; ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (!gens[a].coprime(gens[b])) {
        coprime = false;
        break;
      }
    }
  }
  if (coprime) {
    Series r{1};
    for (const auto& g : gens) {
      Series f(static_cast<std::size_t>(g.degree()) + 1, 0);
      f[0] = 1;
      f[g.degree()] -= 1;
      r = mul(r, f);
    }
    trim(r);
    return r;
  }
  const int n = gens.front().nvars();
  int pivot = 0, best = -1;
  for (int i = 0; i < n; ++i) {
    int count = 0;
    for (const auto& g : gens) count += g[i] > 0;
    if (count > best) {
      best = count;
      pivot = i;
    }
  }
  // N(J) = N(J + (x)) + t N(J : x), and N(J + (x)) = (1 - t) N(J') where J'
  // keeps the generators free of x.
  std::vector<Monomial> rest, colon;
  Monomial x = Monomial::variable(n, pivot);
  for (const auto& g : gens) {
    if (g[pivot] > 0) {
      colon.push_back(g / x);
    } else {
      rest.push_back(g);
      colon.push_back(g);
    }
  }
  Series r = mul(numerator(std::move(rest)), Series{1, -1});
  add_shifted(r, numerator(minimalize(std::move(colon))), 1);
  trim(r);
  return r;
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens, std::vector<std::string> names)
    : nvars_(nvars), names_(std::move(names)) {
  if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("bad variable count");
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw std::invalid_argument("generator from another ring");
  }
  if (names_.empty()) names_ = default_variable_names(nvars);
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(int nvars, std::vector<std::string> names) {
  return MonomialIdeal(nvars, {Monomial(nvars)}, std::move(names));
}

bool MonomialIdeal::contains(const Monomial& m) const noexcept {
  for (const auto& g : gens_) {
    if (g.degree() > m.degree()) break;
    if (g.divides(m)) return true;
  }
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const noexcept {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& m) { return contains(m); });
}

std::vector<Monomial> MonomialIdeal::monomials_in_degree(int d) const {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(nvars_, d)) {
    if (contains(m)) out.push_back(m);
  }
  return out;
}

std::vector<Monomial> MonomialIdeal::gens_of_degree(int d) const {
  std::vector<Monomial> out;
  for (const auto& g : gens_) {
    if (g.degree() == d) out.push_back(g);
  }
  return out;
}

MonomialIdeal MonomialIdeal::quotient(int var) const {
  std::vector<Monomial> out;
  Monomial x = Monomial::variable(nvars_, var);
  for (const auto& g : gens_) out.push_back(g[var] > 0 ? g / x : g);
  return MonomialIdeal(nvars_, std::move(out), names_);
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
  if (other.nvars_ != nvars_) throw std::invalid_argument("ideals from different rings");
  auto all = gens_;
  all.insert(all.end(), other.gens_.begin(), other.gens_.end());
  return MonomialIdeal(nvars_, std::move(all), names_);
}

MonomialIdeal MonomialIdeal::times(const Monomial& m) const {
  std::vector<Monomial> out;
  for (const auto& g : gens_) out.push_back(g * m);
  return MonomialIdeal(nvars_, std::move(out), names_);
}

std::vector<std::string> MonomialIdeal::to_strings() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.to_string(names_));
  return out;
}

std::string MonomialIdeal::to_string() const {
  std::string s = "(";
  auto parts = to_strings();
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s + ")";
}

std::int64_t HilbertSeries::value(int d) const {
  if (d < 0 || dimension < 0) return 0;
  if (dimension == 0) return d < static_cast<int>(reduced.size()) ? reduced[d] : 0;
  std::int64_t h = 0;
  for (int k = 0; k < static_cast<int>(reduced.size()) && k <= d; ++k) {
    h += reduced[k] * binomial(d - k + dimension - 1, dimension - 1);
  }
  return h;
}

HilbertFunction HilbertSeries::function(int bound) const {
  HilbertFunction hf;
  for (int d = 0; d <= bound; ++d) hf.dims.push_back(value(d));
  if (dimension <= 0) hf.stable_value = 0;
  if (dimension == 1) hf.stable_value = degree;
  return hf;
}

HilbertSeries hilbert_series(const MonomialIdeal& j) {
  HilbertSeries hs;
  hs.nvars = j.nvars();
  hs.numerator = numerator(j.gens());
  if (j.is_unit()) {
    hs.numerator = {0};
    hs.reduced = {0};
    hs.dimension = -1;
    hs.degree = 0;
    return hs;
  }
  // strip factors (1 - t) from K(t)
  Series q = hs.numerator;
  int dim = j.nvars();
  while (dim > 0) {
    std::int64_t at_one = 0;
    for (auto c : q) at_one += c;
    if (at_one != 0) break;
    Series next(q.size() - 1, 0);
    std::int64_t carry = 0;  // synthetic division by (1 - t): q = (1 - t) * next
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      carry += q[i];
      next[i] = carry;
    }
    q = next.empty() ? Series{0} : next;
    --dim;
  }
  trim(q);
  hs.reduced = q;
  hs.dimension = dim;
  for (auto c : q) hs.degree += c;
  return hs;
}

bool is_borel_fixed(const MonomialIdeal& j) {
  const int n = j.nvars();
  for (const auto& m : j.gens()) {
    for (int i = 1; i < n; ++i) {
      if (m[i] == 0) continue;
      Monomial base = m / Monomial::variable(n, i);
      for (int k = 0; k < i; ++k) {
        if (!j.contains(base * Monomial::variable(n, k))) return false;
      }
    }
  }
  return true;
}

int borel_regularity(const MonomialIdeal& j) {
  if (!is_borel_fixed(j)) {
    throw DomainError("regularity from generator degrees needs a Borel-fixed ideal");
  }
  return j.max_degree();
}

BettiTable ek_betti(const MonomialIdeal& j) {
  if (!is_borel_fixed(j)) throw DomainError("Eliahou-Kervaire resolution needs a Borel-fixed ideal");
  BettiTable table;
  for (const auto& u : j.gens()) {
    int top = u.max_index();
    for (int i = 0; i <= std::max(top, 0); ++i) {
      std::int64_t c = binomial(top < 0 ? 0 : top, i);
      if (c != 0) table[{i, i + u.degree()}] += c;
    }
  }
  return table;
}

int betti_regularity(const BettiTable& table) {
  int reg = -1;
  for (const auto& [key, value] : table) {
    if (value != 0) reg = std::max(reg, key.second - key.first);
  }
  return reg;
}

Saturation saturate_monomial(const MonomialIdeal& j, int var, bool maximal_ideal) {
  if (var < 0 || var >= j.nvars()) throw std::invalid_argument("variable index out of range");
  if (maximal_ideal) {
    if (!is_borel_fixed(j)) throw DomainError("saturation by the maximal ideal needs a Borel-fixed ideal");
    if (var != j.nvars() - 1) throw std::invalid_argument("use the last variable for a Borel ideal");
  }
  std::vector<Monomial> stripped;
  for (const auto& g : j.gens()) stripped.push_back(g.with_exponent(var, 0));
  Saturation out{MonomialIdeal(j.nvars(), std::move(stripped), j.names()), std::nullopt};
  // h_J - h_sat has series (K_J - K_sat)/(1-t)^n; it is eventually zero iff that is a polynomial.
  Series diff = numerator(j.gens());
  Series sat = numerator(out.ideal.gens());
  if (out.ideal.is_unit()) sat = {0};
  if (j.is_unit()) diff = {0};
  diff.resize(std::max(diff.size(), sat.size()), 0);
  for (std::size_t i = 0; i < sat.size(); ++i) diff[i] -= sat[i];
  trim(diff);
  for (int k = 0; k < j.nvars(); ++k) {
    std::int64_t at_one = 0;
    for (auto c : diff) at_one += c;
    if (at_one != 0) return out;
    Series next(std::max<std::size_t>(diff.size(), 2) - 1, 0);
    std::int64_t carry = 0;
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) {
      carry += diff[i];
      next[i] = carry;
    }
    diff = next;
    trim(diff);
  }
  int last = -1;
  for (int i = 0; i < static_cast<int>(diff.size()); ++i) {
    if (diff[i] != 0) last = i;
  }
  out.saturation_degree = last + 1;
  return out;
}

}  // namespace ginlab
