#include <doctest.h>

#include "ginlab/errors.hpp"
#include "ginlab/partial_elim.hpp"
#include "ginlab/sylvester.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// x0^d + (random form of degree d without x0^d)
Polynomial<Fp> monic(const Ring<Fp>& r, int d, SplitMix64& rng) {
  auto f = random_form(r, d, rng);
  std::vector<Term<Fp>> terms;
  for (const auto& t : f.terms()) {
    if (t.mono[0] != d) terms.push_back(t);
  }
  terms.push_back({Monomial::variable(r->nvars(), 0, d), r->field().one()});
  return Polynomial<Fp>::from_terms(r, std::move(terms));
}

}  // namespace

TEST_CASE("Sylvester layout for a = b = 2, p = 1") {
  auto r = ring<QQ>(4);
  auto f = parse_polynomial(r, "x0^2 + x0*x1 + x2^2");
  auto g = parse_polynomial(r, "x0^2 + x0*x3 + x1*x2");
  auto m = build_sylp(f, g, 1);
  auto small = m.ring;
  auto s = [&](const char* t) { return parse_polynomial(small, t); };
  REQUIRE(m.rows == 3);
  REQUIRE(m.cols == 4);
  CHECK(m.at(0, 0) == s("1"));
  CHECK(m.at(1, 0) == s("x1"));
  CHECK(m.at(2, 0) == s("x2^2"));
  CHECK(m.at(0, 1).is_zero());
  CHECK(m.at(1, 1) == s("1"));
  CHECK(m.at(2, 1) == s("x1"));
  CHECK(m.at(0, 2) == s("1"));
  CHECK(m.at(1, 2) == s("x3"));
  CHECK(m.at(2, 2) == s("x1*x2"));
  CHECK(m.at(2, 3) == s("x3"));
  CHECK(*m.row_degrees == std::vector<int>{0, 1, 2});
  CHECK(*m.col_degrees == std::vector<int>{0, -1, 0, -1});
  CHECK(m.ledger_consistent());
}

TEST_CASE("the full matrix gives the resultant") {
  auto r = ring<QQ>(3);
  auto lin = build_sylp(parse_polynomial(r, "x0 - x1"), parse_polynomial(r, "x0 - x2"), 0);
  auto minors = maximal_minors_serial(lin);
  REQUIRE(minors.size() == 1);
  CHECK(minors[0] == parse_polynomial(lin.ring, "x1 - x2"));

  auto r4 = ring(4);
  SplitMix64 rng(1);
  auto m = build_sylp(monic(r4, 2, rng), monic(r4, 3, rng), 0);
  CHECK(m.rows == 5);
  auto res = maximal_minors_serial(m);
  REQUIRE(res.size() == 1);
  CHECK(res[0].is_homogeneous());
  CHECK(res[0].degree() == 6);
}

TEST_CASE("build_sylp rejects bad input") {
  auto r = ring<QQ>(3);
  auto p = [&](const char* t) { return parse_polynomial(r, t); };
  CHECK_THROWS(build_sylp(p("2*x0^2 + x1^2"), p("x0^2"), 1));
  CHECK_THROWS(build_sylp(p("x0^3"), p("x0^2"), 1));
  CHECK_THROWS(build_sylp(p("x0^2"), p("x0^2"), 2));
  CHECK_THROWS(build_sylp(p("x0^2 + x1"), p("x0^2"), 1));
}

TEST_CASE("en_regularity and the closed formula") {
  CHECK(en_regularity({0, 1, 2}, {0, -1, 0, -1}) == 2);
  CHECK(en_regularity({0}, {2, 1}) == 2);
  CHECK(en_regularity({0, 0}, {1, 1}) == 2);
  CHECK_THROWS(en_regularity({}, {1}));
  CHECK_THROWS(en_regularity({0, 0}, {1}));
  CHECK(kp_regularity_formula(2, 2, 1) == 2);
  CHECK(kp_regularity_formula(2, 3, 1) == 4);
  CHECK(kp_regularity_formula(3, 3, 1) == 7);
  CHECK(kp_regularity_formula(3, 3, 2) == 4);
  CHECK_THROWS(kp_regularity_formula(2, 2, 2));
  CHECK_THROWS(kp_regularity_formula(3, 2, 1));
}

TEST_CASE("codimension examples") {
  auto r = ring<QQ>(3);
  CHECK(codimension(ideal(r, "x0, x1")) == 2);
  CHECK(codimension(ideal(r, "x0*x1")) == 1);
  CHECK(codimension(ideal(r, "x0, x1, x2")) == 3);
  CHECK(codimension(ideal(r, "1")) == 4);
}

TEST_CASE("unit_reduce keeps the minors and the ledger") {
  auto r = ring(4);
  SplitMix64 rng(7);
  for (auto [a, b, p] : {std::tuple{2, 2, 1}, {2, 3, 1}, {3, 3, 1}, {3, 3, 2}}) {
    auto m = build_sylp(monic(r, a, rng), monic(r, b, rng), p);
    auto red = unit_reduce(m);
    CHECK(red.rows == static_cast<std::size_t>(a - p));
    CHECK(red.cols == static_cast<std::size_t>(a));
    CHECK(red.ledger_consistent());
    for (std::size_t i = 0; i < red.rows; ++i) {
      for (std::size_t j = 0; j < red.cols; ++j) {
        if (!red.at(i, j).is_zero()) CHECK(red.at(i, j).degree() == b + static_cast<int>(i) - static_cast<int>(j));
      }
    }
    auto full = maximal_minors_ideal(m);
    auto small = maximal_minors_ideal(red);
    CHECK(ideal_equal(full, small, TermOrder::revlex()));
    CHECK(en_regularity(*red.row_degrees, *red.col_degrees) == kp_regularity_formula(a, b, p));
  }
}

TEST_CASE("unit_reduce on a matrix without units is the identity") {
  auto r = ring<QQ>(3);
  PolyMatrix<QQ> m(r, 1, 2);
  m.at(0, 0) = parse_polynomial(r, "x0");
  m.at(0, 1) = parse_polynomial(r, "x1");
  m.row_degrees = std::vector<int>{0};
  m.col_degrees = std::vector<int>{1, 1};
  auto red = unit_reduce(m);
  CHECK(red.entries == m.entries);
}

TEST_CASE("minors equal the partial elimination ideal") {
  auto r = ring(4);
  SplitMix64 rng(3);
  for (auto [a, b] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
    auto f = monic(r, a, rng), g = monic(r, b, rng);
    auto tower = partial_elim_ideals(IdealHandle<Fp>(r, {f, g}), 1, TermOrder::revlex());
    MinorStats stats;
    auto minors = maximal_minors_ideal(build_sylp(f, g, 1), 1, &stats);
    CHECK(stats.total == static_cast<std::size_t>(a + b));
    CHECK(ideal_equal(minors, tower.level(1), TermOrder::revlex()));
  }
}

TEST_CASE("serial and parallel minors agree") {
  auto r = ring(4);
  SplitMix64 rng(11);
  auto m = build_sylp(monic(r, 3, rng), monic(r, 4, rng), 2);
  MinorStats s1, s2;
  auto serial = maximal_minors_serial(m, &s1);
  for (int threads : {1, 2, 4}) {
    CHECK(maximal_minors_parallel(m, threads, &s2) == serial);
    CHECK(s1.total == s2.total);
    CHECK(s1.zero == s2.zero);
  }
  CHECK(s1.total == 21);  // C(7, 5)
}

TEST_CASE("minors refuse wide matrices") {
  auto r = ring<QQ>(3);
  PolyMatrix<QQ> wide(r, 1, 13);
  CHECK_THROWS_AS(maximal_minors_serial(wide), ResourceLimit);
  PolyMatrix<QQ> tall(r, 3, 2);
  CHECK_THROWS(maximal_minors_serial(tall));
}
