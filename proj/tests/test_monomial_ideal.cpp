#include <doctest.h>

#include "ginlab/errors.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("minimal generators and membership") {
  auto j = mono_ideal(3, "x0^2*x1, x0*x1, x2^3, x0*x1*x2");
  CHECK(j == mono_ideal(3, "x0*x1, x2^3"));
  CHECK(j.contains(Monomial{1, 2, 0}));
  CHECK(!j.contains(Monomial{2, 0, 2}));
  CHECK(j.contains(mono_ideal(3, "x0^2*x1^3")));
  CHECK(j.max_degree() == 3);
  CHECK(j.gens_of_degree(2) == std::vector<Monomial>{Monomial{1, 1, 0}});
  CHECK(j.quotient(1) == mono_ideal(3, "x0, x2^3"));
  CHECK(j.to_string() == "(x0*x1, x2^3)");
  CHECK(MonomialIdeal::unit(3).is_unit());
  CHECK(MonomialIdeal(3, {}).is_zero());
}

TEST_CASE("Hilbert series examples") {
  auto hyper = hilbert_series(mono_ideal(3, "x0"));
  CHECK(hyper.numerator == std::vector<std::int64_t>{1, -1});
  CHECK(hyper.reduced == std::vector<std::int64_t>{1});
  CHECK(hyper.dimension == 2);
  CHECK(hyper.degree == 1);

  // the revlex gin of a (2,2) complete intersection: a quartic curve
  auto curve = hilbert_series(mono_ideal(4, "x0^2, x0*x1, x1^3"));
  CHECK(curve.dimension == 2);
  CHECK(curve.degree == 4);
  CHECK(curve.function(6).dims == std::vector<std::int64_t>{1, 4, 8, 12, 16, 20, 24});

  auto pts = hilbert_series(mono_ideal(3, "x0^2, x0*x1, x0*x2, x1^3"));
  CHECK(pts.dimension == 1);
  CHECK(pts.degree == 3);
  CHECK(pts.function(4).stable_value == 3);

  auto free = hilbert_series(MonomialIdeal(3, {}));
  CHECK(free.value(5) == 21);
  CHECK(free.dimension == 3);

  auto unit = hilbert_series(MonomialIdeal::unit(3));
  CHECK(unit.dimension == -1);
  CHECK(unit.value(0) == 0);
}

TEST_CASE("Hilbert series agrees with counting standard monomials") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    std::vector<Monomial> gens;
    const int count = 1 + static_cast<int>(rng.below(5));
    for (int k = 0; k < count; ++k) {
      std::vector<int> e(n, 0);
      const int d = 1 + static_cast<int>(rng.below(4));
      for (int t = 0; t < d; ++t) ++e[rng.below(n)];
      gens.emplace_back(n, e);
    }
    MonomialIdeal j(n, gens);
    auto hs = hilbert_series(j);
    for (int d = 0; d <= 9; ++d) CHECK(hs.value(d) == count_standard(j, d));
  }
}

TEST_CASE("Borel-fixed examples and regularity") {
  CHECK(borel_regularity(mono_ideal(3, "x0^2, x0*x1, x1^3")) == 3);
  CHECK(borel_regularity(mono_ideal(4, "x0^2, x0*x1, x0*x2^2, x1^4")) == 4);
  CHECK_THROWS_AS(borel_regularity(mono_ideal(3, "x1")), DomainError);
  CHECK_THROWS_AS(ek_betti(mono_ideal(3, "x0*x2")), DomainError);
}

TEST_CASE("Eliahou-Kervaire examples") {
  auto square = ek_betti(mono_ideal(3, "x0^2, x0*x1, x1^2"));
  CHECK(square == BettiTable{{{0, 2}, 3}, {{1, 3}, 2}});
  CHECK(betti_regularity(square) == 2);
  auto koszul = ek_betti(mono_ideal(3, "x0, x1, x2"));
  CHECK(koszul == BettiTable{{{0, 1}, 3}, {{1, 2}, 3}, {{2, 3}, 1}});
  CHECK(betti_regularity(koszul) == 1);
}

TEST_CASE("Eliahou-Kervaire numbers reproduce the Hilbert series and regularity") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 4;
    auto j = random_borel(n, 5, 1 + static_cast<int>(rng.below(3)), rng);
    REQUIRE(is_borel_fixed(j));
    auto table = ek_betti(j);
    CHECK(betti_regularity(table) == borel_regularity(j));
    // K(t) = 1 + sum (-1)^(i+1) beta_{i,j} t^j
    auto hs = hilbert_series(j);
    std::vector<std::int64_t> k(hs.numerator.size() + 8, 0);
    k[0] = 1;
    for (const auto& [key, value] : table) {
      REQUIRE(key.second < static_cast<int>(k.size()));
      k[key.second] += (key.first % 2 == 0 ? -1 : 1) * value;
    }
    while (k.size() > 1 && k.back() == 0) k.pop_back();
    CHECK(k == hs.numerator);
  }
}

TEST_CASE("saturation examples") {
  auto pts = saturate_monomial(mono_ideal(3, "x0^2, x0*x1, x0*x2, x1^3"), 2, true);
  CHECK(pts.ideal == mono_ideal(3, "x0, x1^3"));
  CHECK(pts.saturation_degree == 2);

  auto same = saturate_monomial(mono_ideal(3, "x0^2, x0*x1, x1^3"), 2, true);
  CHECK(same.ideal == mono_ideal(3, "x0^2, x0*x1, x1^3"));
  CHECK(same.saturation_degree == 0);

  auto never = saturate_monomial(mono_ideal(3, "x0*x2, x1*x2^2"), 2);
  CHECK(never.ideal == mono_ideal(3, "x0, x1"));
  CHECK(!never.saturation_degree);

  CHECK_THROWS_AS(saturate_monomial(mono_ideal(3, "x1*x2"), 2, true), DomainError);
  CHECK_THROWS(saturate_monomial(mono_ideal(3, "x0"), 1, true));
  CHECK_THROWS(saturate_monomial(mono_ideal(3, "x0"), 3));
}

TEST_CASE("saturation degree matches standard-monomial counts") {
  SplitMix64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 2;
    auto j = random_borel(n, 4, 2, rng);
    auto sat = saturate_monomial(j, n - 1, true);
    REQUIRE(sat.saturation_degree);
    const int s = *sat.saturation_degree;
    for (int d = s; d <= s + 4; ++d) CHECK(count_standard(j, d) == count_standard(sat.ideal, d));
    if (s > 0) CHECK(count_standard(j, s - 1) != count_standard(sat.ideal, s - 1));
  }
}
