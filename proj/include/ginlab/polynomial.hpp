#pragma once

#include <algorithm>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ginlab/field.hpp"
#include "ginlab/monomial.hpp"
#include "ginlab/term_order.hpp"

namespace ginlab {

/// S = k[x0..x_{n-1}] over a fixed coefficient field. Immutable once created.
template <class F>
class RingContext {
 public:
  using Field = F;
  using Element = typename F::Element;

  static std::shared_ptr<const RingContext> create(int nvars, F field = F{},
                                                   std::vector<std::string> names = {}) {
    if (nvars < 1 || nvars > kMaxVars) {
      throw std::invalid_argument("ring needs between 1 and " + std::to_string(kMaxVars) +
                                  " variables");
    }
    if (names.empty()) names = default_variable_names(nvars);
    if (static_cast<int>(names.size()) != nvars) {
      throw std::invalid_argument("variable name list does not match variable count");
    }
    return std::shared_ptr<const RingContext>(
        new RingContext(nvars, std::move(field), std::move(names)));
  }

  int nvars() const noexcept { return nvars_; }
  const F& field() const noexcept { return field_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool same_as(const RingContext& other) const {
    return this == &other || (nvars_ == other.nvars_ && field_ == other.field_);
  }

 private:
  RingContext(int nvars, F field, std::vector<std::string> names)
      : nvars_(nvars), field_(std::move(field)), names_(std::move(names)) {}

  int nvars_;
  F field_;
  std::vector<std::string> names_;
};

template <class F>
using Ring = std::shared_ptr<const RingContext<F>>;

template <class F>
struct Term {
  Monomial mono;
  typename F::Element coeff;
};

/// Polynomial with exact coefficients. Terms are stored in a canonical,
/// order-agnostic layout (degree, then lex, descending); leading-term queries
/// take the term order as an argument.
template <class F>
class Polynomial {
 public:
  using Element = typename F::Element;

  explicit Polynomial(Ring<F> ring) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("polynomial needs a ring");
  }

  /// Combines like terms, drops zeros, sorts canonically.
  static Polynomial from_terms(Ring<F> ring, std::vector<Term<F>> terms) {
    Polynomial p(std::move(ring));
    const F& k = p.field();
    for (const auto& t : terms) {
      if (t.mono.nvars() != p.ring_->nvars()) {
        throw std::invalid_argument("term does not belong to the polynomial's ring");
      }
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term<F>& a, const Term<F>& b) { return a.mono > b.mono; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = k.add(p.terms_.back().coeff, t.coeff);
      } else {
        if (!p.terms_.empty() && k.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && k.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    return p;
  }

  static Polynomial constant(Ring<F> ring, Element c) {
    Monomial one(ring->nvars());
    return from_terms(ring, {Term<F>{one, std::move(c)}});
  }
  static Polynomial variable(Ring<F> ring, int index) {
    Monomial m = Monomial::variable(ring->nvars(), index);
    Element one = ring->field().one();
    return from_terms(ring, {Term<F>{m, one}});
  }
  static Polynomial monomial(Ring<F> ring, Monomial m, Element c) {
    return from_terms(ring, {Term<F>{std::move(m), std::move(c)}});
  }

  const Ring<F>& ring() const noexcept { return ring_; }
  const F& field() const noexcept { return ring_->field(); }
  int nvars() const noexcept { return ring_->nvars(); }
  const std::vector<Term<F>>& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
  }
  /// Nonzero constant: a unit of the ring.
  bool is_unit() const noexcept { return terms_.size() == 1 && terms_.front().mono.is_one(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  bool is_homogeneous() const noexcept {
    return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
  }

  /// Coefficient of `m`, zero when absent.
  Element coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term<F>& t, const Monomial& x) { return t.mono > x; });
    return it != terms_.end() && it->mono == m ? it->coeff : field().zero();
  }

  Term<F> leading_term(const CompiledOrder& ord) const {
    if (terms_.empty()) throw std::invalid_argument("leading term of the zero polynomial");
    if (ord.nvars() != nvars()) throw std::invalid_argument("term order built for another ring");
    auto best = terms_.begin();
    auto best_key = ord.key(best->mono);
    for (auto it = terms_.begin() + 1; it != terms_.end(); ++it) {
      auto k = ord.key(it->mono);
      if (k > best_key) {
        best = it;
        best_key = k;
      }
    }
    return *best;
  }
  Term<F> leading_term(const TermOrder& ord) const {
    return leading_term(CompiledOrder(ord, nvars()));
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
    return r;
  }
  Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, true); }
  Polynomial operator*(const Polynomial& o) const {
    check_ring(o);
    const F& k = field();
    std::unordered_map<std::uint64_t, Element> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
      for (const auto& b : o.terms_) {
        Monomial m = a.mono * b.mono;
        Element c = k.mul(a.coeff, b.coeff);
        auto [it, inserted] = acc.try_emplace(m.packed(), c);
        if (!inserted) it->second = k.add(it->second, c);
      }
    }
    std::vector<Term<F>> out;
    out.reserve(acc.size());
    for (auto& [packed, c] : acc) {
      if (!k.is_zero(c)) out.push_back({Monomial::from_packed(nvars(), packed), std::move(c)});
    }
    return from_terms(ring_, std::move(out));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Element& c) const {
    Polynomial r(ring_);
    if (field().is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, field().mul(t.coeff, c)});
    return r;
  }
  /// Multiplication by c * m; keeps canonical order since m* is monotone for deglex.
  Polynomial times_monomial(const Monomial& m, const Element& c) const {
    Polynomial r(ring_);
    if (field().is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field().mul(t.coeff, c)});
    return r;
  }
  /// Scales so the leading coefficient under `ord` is one.
  Polynomial monic(const CompiledOrder& ord) const {
    if (is_zero()) return *this;
    return scaled(field().inv(leading_term(ord).coeff));
  }

  Polynomial pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    Polynomial result = constant(ring_, field().one());
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  /// Ring map x_i -> images[i]; the images may live in a different ring.
  Polynomial substitute(std::span<const Polynomial> images) const {
    if (static_cast<int>(images.size()) != nvars()) {
      throw std::invalid_argument("substitution needs one image per variable");
    }
    const Ring<F>& target = images.front().ring();
    for (const auto& img : images) {
      if (!img.ring()->same_as(*target)) throw std::invalid_argument("images in different rings");
    }
    if (!(target->field() == field())) throw std::invalid_argument("substitution changes field");
    // powers[i][e] = images[i]^e, grown on demand
    std::vector<std::vector<Polynomial>> powers(nvars());
    auto power = [&](int i, int e) -> const Polynomial& {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, field().one()));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
      return pw[e];
    };
    std::vector<Term<F>> acc_terms;
    for (const auto& t : terms_) {
      Polynomial prod = constant(target, t.coeff);
      for (int i = 0; i < nvars(); ++i) {
        if (int e = t.mono[i]; e > 0) prod *= power(i, e);
      }
      for (auto& term : prod.terms_) acc_terms.push_back(std::move(term));
    }
    return from_terms(target, std::move(acc_terms));
  }

  /// The part of degree d.
  Polynomial homogeneous_part(int d) const {
    Polynomial r(ring_);
    for (const auto& t : terms_) {
      if (t.mono.degree() == d) r.terms_.push_back(t);
    }
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    const auto& names = ring_->names();
    bool first = true;
    for (const auto& t : terms_) {
      std::string c = field().to_string(t.coeff);
      bool negative = !c.empty() && c.front() == '-';
      if (negative) c.erase(0, 1);
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (t.mono.is_one()) {
        out += c;
      } else {
        if (c != "1") out += c + "*";
        out += t.mono.to_string(names);
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!a.ring_->same_as(*b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono) ||
          !a.field().equal(a.terms_[i].coeff, b.terms_[i].coeff)) {
        return false;
      }
    }
    return true;
  }

 private:
  void check_ring(const Polynomial& o) const {
    if (!ring_->same_as(*o.ring_)) throw std::invalid_argument("polynomials from different rings");
  }

  Polynomial combine(const Polynomial& o, bool subtract) const {
    check_ring(o);
    const F& k = field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    auto emit_b = [&](const Term<F>& t) {
      r.terms_.push_back({t.mono, subtract ? k.neg(t.coeff) : t.coeff});
    };
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->mono > b->mono)) {
        r.terms_.push_back(*a++);
      } else if (a == terms_.end() || b->mono > a->mono) {
        emit_b(*b++);
      } else {
        Element c = subtract ? k.sub(a->coeff, b->coeff) : k.add(a->coeff, b->coeff);
        if (!k.is_zero(c)) r.terms_.push_back({a->mono, std::move(c)});
        ++a;
        ++b;
      }
    }
    return r;
  }

  Ring<F> ring_;
  std::vector<Term<F>> terms_;
};

/// Parses the text grammar: terms joined by `+`/`-`, each `coeff*x<i>^<e>*...`
/// with an optional coefficient (integer or a/b). Variable names come from the ring.
template <class F>
Polynomial<F> parse_polynomial(const Ring<F>& ring, std::string_view text);

template <class F>
std::vector<Polynomial<F>> parse_polynomial_list(const Ring<F>& ring, std::string_view text);

/// Largest variable index mentioned in `text` (x<i> names), -1 if none.
int max_variable_index(std::string_view text);

extern template class Polynomial<PrimeField>;
extern template class Polynomial<RationalField>;
extern template Polynomial<PrimeField> parse_polynomial(const Ring<PrimeField>&, std::string_view);
extern template Polynomial<RationalField> parse_polynomial(const Ring<RationalField>&,
                                                           std::string_view);
extern template std::vector<Polynomial<PrimeField>> parse_polynomial_list(
    const Ring<PrimeField>&, std::string_view);
extern template std::vector<Polynomial<RationalField>> parse_polynomial_list(
    const Ring<RationalField>&, std::string_view);

}  // namespace ginlab
