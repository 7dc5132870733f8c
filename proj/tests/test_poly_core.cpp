#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

std::vector<TermOrder> all_orders(int n) {
  std::vector<std::int64_t> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i + 1;
  return {TermOrder::lex(), TermOrder::revlex(), TermOrder::weight(w, TermOrder::revlex()),
          TermOrder::elimination(n, TermOrder::revlex()), TermOrder::elimination(n, TermOrder::lex())};
}

Monomial random_monomial(int n, int max_deg, SplitMix64& rng) {
  std::vector<int> e(n);
  int left = static_cast<int>(rng.below(max_deg + 1));
  for (int i = 0; i < n && left > 0; ++i) {
    e[i] = static_cast<int>(rng.below(left + 1));
    left -= e[i];
  }
  return Monomial(n, e);
}

}  // namespace

TEST_CASE("cmp_monomials examples") {
  CHECK(cmp_monomials(Monomial{1, 0, 0, 0}, Monomial{0, 1, 0, 0}, TermOrder::lex()) > 0);
  // x1^2 > x0*x2 under revlex
  CHECK(cmp_monomials(Monomial{0, 2, 0}, Monomial{1, 0, 1}, TermOrder::revlex()) > 0);
  CHECK(cmp_monomials(Monomial{0, 2, 0}, Monomial{1, 0, 1}, TermOrder::lex()) < 0);
  for (const auto& o : all_orders(3)) {
    CHECK(cmp_monomials(Monomial{3, 0, 0}, Monomial{0, 0, 2}, o) > 0);
    CHECK(cmp_monomials(Monomial{0, 0, 4}, Monomial{3, 0, 0}, o) > 0);
    CHECK(cmp_monomials(Monomial{1, 1, 0}, Monomial{1, 1, 0}, o) == 0);
  }
}

TEST_CASE("leading_term examples") {
  auto r = ring(4);
  auto f = parse_polynomial(r, "x0*x1 + x2^2");
  CHECK(f.leading_term(TermOrder::lex()).mono == Monomial{1, 1, 0, 0});
  auto g = parse_polynomial(r, "x1^2 + x0*x2");
  auto lt = g.leading_term(TermOrder::revlex());
  CHECK(lt.mono == Monomial{0, 2, 0, 0});
  CHECK(r->field().is_one(lt.coeff));
  auto h = parse_polynomial(r, "5*x3");
  CHECK(h.leading_term(TermOrder::lex()).coeff == r->field().from_int(5));
  CHECK_THROWS(Polynomial<Fp>(r).leading_term(TermOrder::lex()));
}

TEST_CASE("poly arithmetic examples") {
  auto r = ring<QQ>(3);
  auto p = [&](const char* s) { return parse_polynomial(r, s); };
  CHECK(p("x0 + x1") + p("-x1") == p("x0"));
  CHECK(p("x0 + x1") * p("x0 - x1") == p("x0^2 - x1^2"));
  std::vector<Polynomial<QQ>> images{p("x0 + x1"), p("x1"), p("x2")};
  CHECK(p("x0^2").substitute(images) == p("x0^2 + 2*x0*x1 + x1^2"));
  CHECK(p("3*x0").scaled(r->field().from_int(2)) == p("6*x0"));
  CHECK(p("x0 - x0").is_zero());
  CHECK(p("x0^2*x1 - 3*x2^3").to_string() == "x0^2*x1 - 3*x2^3");
  auto other = ring<QQ>(4);
  CHECK_THROWS(p("x0") + parse_polynomial(other, "x0"));
}

TEST_CASE("parser rejects malformed text") {
  auto r = ring(3);
  CHECK_THROWS(parse_polynomial(r, "x0^"));
  CHECK_THROWS(parse_polynomial(r, "x5"));
  CHECK_THROWS(parse_polynomial(r, "2 x0"));
  CHECK(parse_polynomial_list(r, "x0, x1\nx2 # comment").size() == 3);
}

TEST_CASE("term orders are total, antisymmetric, transitive and multiplicative") {
  SplitMix64 rng(17);
  for (int n = 2; n <= 4; ++n) {
    for (const auto& o : all_orders(n)) {
      CompiledOrder c(o, n);
      for (int trial = 0; trial < 300; ++trial) {
        auto a = random_monomial(n, 6, rng), b = random_monomial(n, 6, rng), q = random_monomial(n, 3, rng);
        const auto ab = cmp_monomials(a, b, o);
        CHECK((ab == 0) == (a == b));
        CHECK(cmp_monomials(b, a, o) == (0 <=> ab));
        if (ab > 0) CHECK(cmp_monomials(a * q, b * q, o) > 0);
        auto z = random_monomial(n, 6, rng);
        if (ab > 0 && cmp_monomials(b, z, o) > 0) CHECK(cmp_monomials(a, z, o) > 0);
        if (a.degree() > b.degree()) CHECK(ab > 0);
      }
      for (int d = 0; d <= 8; ++d) {
        auto monos = monomials_of_degree(n, d);
        std::sort(monos.begin(), monos.end(), [&](auto& x, auto& y) { return c.greater(x, y); });
        for (std::size_t i = 1; i < monos.size(); ++i) CHECK(c.greater(monos[i - 1], monos[i]));
      }
    }
  }
}

TEST_CASE("elimination order with lex inside is lex") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(CompiledOrder(TermOrder::elimination(n, TermOrder::lex()), n) == CompiledOrder(TermOrder::lex(), n));
    // in two variables every degree order coincides
    if (n > 2) CHECK(!(CompiledOrder(TermOrder::elimination(n, TermOrder::revlex()), n) == CompiledOrder(TermOrder::revlex(), n)));
  }
}

TEST_CASE("weight orders need positive weights") {
  CHECK_THROWS(TermOrder::weight({1, 0, 2}, TermOrder::revlex()));
  CHECK_THROWS(TermOrder::parse("weight:1,-2", 2));
  CHECK(TermOrder::parse("weight:6,2,1", 3).kind() == TermOrder::Kind::Weight);
}

TEST_CASE("substitution is a ring homomorphism") {
  SplitMix64 rng(5);
  auto r = ring(4);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial<Fp>> images;
    for (int i = 0; i < 4; ++i) images.push_back(random_form(r, 1, rng));
    auto f = random_form(r, 2, rng, 5), g = random_form(r, 2, rng, 5), h = random_form(r, 3, rng, 5);
    CHECK((f + g).substitute(images) == f.substitute(images) + g.substitute(images));
    CHECK((f * h).substitute(images) == f.substitute(images) * h.substitute(images));
  }
}

TEST_CASE("prime field and rational arithmetic agree mod p") {
  SplitMix64 rng(9);
  const std::uint32_t p = 1000003;
  Fp fp(p);
  QQ qq;
  auto rp = ring(3, fp);
  auto rq = ring(3, qq);
  auto reduce = [&](const Polynomial<QQ>& f) {
    std::vector<Term<Fp>> terms;
    for (const auto& t : f.terms()) {
      CHECK(t.coeff.get_den() == 1);
      mpz_class c = t.coeff.get_num() % p;
      terms.push_back({t.mono, fp.from_int(c.get_si())});
    }
    return Polynomial<Fp>::from_terms(rp, std::move(terms));
  };
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Term<QQ>> a, b;
    for (const auto& m : monomials_of_degree(3, 2)) {
      a.push_back({m, qq.from_int(static_cast<std::int64_t>(rng.below(2001)) - 1000)});
      b.push_back({m, qq.from_int(static_cast<std::int64_t>(rng.below(2001)) - 1000)});
    }
    auto fq = Polynomial<QQ>::from_terms(rq, a), gq = Polynomial<QQ>::from_terms(rq, b);
    auto fp_ = reduce(fq), gp_ = reduce(gq);
    CHECK(reduce(fq * gq - gq.scaled(qq.from_int(7))) == fp_ * gp_ - gp_.scaled(fp.from_int(7)));
  }
}

TEST_CASE("prime field rejects composite moduli") {
  CHECK_THROWS(Fp(15));
  CHECK_NOTHROW(Fp(7));
}
