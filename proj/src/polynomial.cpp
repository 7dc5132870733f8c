#include "ginlab/polynomial.hpp"

#include <cctype>

#include "ginlab/errors.hpp"

namespace ginlab {

template class Polynomial<PrimeField>;
template class Polynomial<RationalField>;

namespace {

template <class F>
class Parser {
 public:
  Parser(const Ring<F>& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial<F> parse() {
    const F& k = ring_->field();
    std::vector<Term<F>> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-' between terms", pos_);
      }
      Term<F> t = parse_term();
      if (negative) t.coeff = k.neg(t.coeff);
      terms.push_back(std::move(t));
      first = false;
      skip_ws();
    }
    return Polynomial<F>::from_terms(ring_, std::move(terms));
  }

 private:
  Term<F> parse_term() {
    const F& k = ring_->field();
    std::vector<int> exps(ring_->nvars(), 0);
    auto coeff = k.one();
    while (true) {
      skip_ws();
      if (at_end()) throw ParseError("dangling term", pos_);
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = k.mul(coeff, parse_number());
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        int var = parse_variable();
        int e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = parse_exponent();
        }
        exps[var] += e;
        if (exps[var] > kMaxExponent) throw ParseError("exponent too large", pos_);
      } else {
        throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return Term<F>{Monomial(ring_->nvars(), exps), coeff};
  }

  typename F::Element parse_number() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      std::size_t den = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (den == pos_) throw ParseError("missing denominator", pos_);
    }
    try {
      return ring_->field().from_string(text_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      throw ParseError(e.what(), start);
    }
  }

  int parse_exponent() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected exponent after '^'", pos_);
    auto digits = text_.substr(start, pos_ - start);
    if (digits.size() > 4) throw ParseError("exponent too large", start);
    return std::stoi(std::string(digits));
  }

  int parse_variable() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    const auto& names = ring_->names();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return static_cast<int>(i);
    }
    throw ParseError("unknown variable '" + std::string(name) + "'", start);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  const Ring<F>& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class F>
Polynomial<F> parse_polynomial(const Ring<F>& ring, std::string_view text) {
  return Parser<F>(ring, text).parse();
}

template <class F>
std::vector<Polynomial<F>> parse_polynomial_list(const Ring<F>& ring, std::string_view text) {
  std::vector<Polynomial<F>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of("\n;,", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    if (auto hash = item.find('#'); hash != std::string_view::npos) item = item.substr(0, hash);
    bool blank = std::all_of(item.begin(), item.end(),
                             [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank) out.push_back(parse_polynomial(ring, item));
    start = end + 1;
  }
  return out;
}

int max_variable_index(std::string_view text) {
  int best = -1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    if (i > 0 && (std::isalnum(static_cast<unsigned char>(text[i - 1])) || text[i - 1] == '_')) {
      continue;
    }
    std::size_t j = i + 1;
    int v = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      v = v * 10 + (text[j] - '0');
      ++j;
    }
    if (j > i + 1) best = std::max(best, v);
  }
  return best;
}

template Polynomial<PrimeField> parse_polynomial(const Ring<PrimeField>&, std::string_view);
template Polynomial<RationalField> parse_polynomial(const Ring<RationalField>&, std::string_view);
template std::vector<Polynomial<PrimeField>> parse_polynomial_list(const Ring<PrimeField>&,
                                                                   std::string_view);
template std::vector<Polynomial<RationalField>> parse_polynomial_list(const Ring<RationalField>&,
                                                                      std::string_view);

}  // namespace ginlab
