#include <doctest.h>

#include <algorithm>

#include "ginlab/errors.hpp"
#include "ginlab/segments.hpp"
#include "support.hpp"

using namespace testing;

namespace {

MonomialIdeal random_ideal(int n, SplitMix64& rng) {
  std::vector<Monomial> gens;
  const int count = 1 + static_cast<int>(rng.below(5));
  for (int k = 0; k < count; ++k) {
    std::vector<int> e(n, 0);
    const int d = 1 + static_cast<int>(rng.below(4));
    for (int t = 0; t < d; ++t) ++e[rng.below(n)];
    gens.emplace_back(n, e);
  }
  return MonomialIdeal(n, gens);
}

bool satisfies(const std::vector<LinearConstraint>& system, const std::vector<std::int64_t>& w) {
  for (const auto& c : system) {
    std::int64_t v = 0;
    for (std::size_t i = 0; i < w.size(); ++i) v += c.coeffs[i] * w[i];
    if (c.strict ? v <= 0 : v < 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("segment_space examples") {
  CHECK(segment_space(3, 2, 3, TermOrder::lex()) == std::vector<Monomial>{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}});
  CHECK(segment_space(3, 2, 3, TermOrder::revlex()) == std::vector<Monomial>{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}});
  CHECK(segment_space(3, 2, 0, TermOrder::lex()).empty());
  CHECK(segment_space(3, 2, 6, TermOrder::lex()).size() == 6);
  CHECK_THROWS(segment_space(3, 2, 7, TermOrder::lex()));
}

TEST_CASE("segments for three general points") {
  HilbertFunction hf{{1, 3, 3, 3, 3}, 3};
  auto lex = segment_ideal_of(hf, TermOrder::lex(), 3, 4);
  CHECK(lex.is_ideal);
  CHECK(lex.ideal == mono_ideal(3, "x0^2, x0*x1, x0*x2, x1^3"));
  CHECK(lex.contains(Monomial{0, 3, 0}));
  CHECK(!lex.contains(Monomial{0, 2, 1}));
  auto revlex = segment_ideal_of(hf, TermOrder::revlex(), 3, 4);
  CHECK(revlex.is_ideal);
  CHECK(revlex.ideal == mono_ideal(3, "x0^2, x0*x1, x1^2"));
  CHECK(quotient_dim(hf, 9) == 3);
  CHECK_THROWS(quotient_dim(HilbertFunction{{1, 3}, std::nullopt}, 5));
}

TEST_CASE("lex ideal of a (2,2) complete intersection") {
  HilbertFunction hf{{1, 4, 8, 12, 16, 20, 24, 28, 32}, std::nullopt};
  auto lex = lex_ideal_of_hf(hf, 4, 8);
  CHECK(lex.max_degree() == 6);
  CHECK(monomial_hilbert(lex, 8).dims == hf.dims);
  CHECK(is_borel_fixed(lex));
  CHECK(is_segment(lex, TermOrder::lex(), 1, 8));
}

TEST_CASE("lex_ideal_of_hf rejects non-Hilbert functions") {
  CHECK_THROWS_AS(lex_ideal_of_hf(HilbertFunction{{1, 2, 4}, std::nullopt}, 3, 2), DomainError);
}

TEST_CASE("lex segments of a Hilbert function always form an ideal") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 3;
    auto j = random_ideal(n, rng);
    auto hf = monomial_hilbert(j, 7);
    auto seg = segment_ideal_of(hf, TermOrder::lex(), n, 7);
    CHECK(seg.is_ideal);
    auto back = monomial_hilbert(seg.ideal, 7);
    CHECK(back.dims == hf.dims);
    CHECK(is_borel_fixed(seg.ideal));
    CHECK(is_segment(seg.ideal, TermOrder::lex(), 1, 7));
  }
}

TEST_CASE("is_segment and verify_weight examples") {
  auto rev = mono_ideal(3, "x0^2, x0*x1, x1^2");
  CHECK(is_segment(rev, TermOrder::revlex(), 2, 4));
  CHECK(!is_segment(rev, TermOrder::lex(), 2, 4));
  CHECK(verify_weight(rev, {5, 4, 1}, 2, 4));
  CHECK(!verify_weight(rev, {1, 1, 1}, 2, 2));  // ties fail
  CHECK(is_segment(mono_ideal(3, "x0^2, x0*x1, x0*x2, x1^3"), TermOrder::lex(), 1, 4));
}

TEST_CASE("Borel enumeration examples") {
  auto one = enumerate_borel_by_hf(HilbertFunction{{1, 2, 2, 2}, 2}, 2, 3);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == mono_ideal(2, "x0^2"));
  auto line = enumerate_borel_by_hf(HilbertFunction{{1, 1, 1}, 1}, 2, 2);
  REQUIRE(line.size() == 1);
  CHECK(line[0] == mono_ideal(2, "x0"));
  auto three = enumerate_borel_by_hf(HilbertFunction{{1, 3, 3, 3}, 3}, 3, 3);
  CHECK(std::find(three.begin(), three.end(), mono_ideal(3, "x0^2, x0*x1, x0*x2, x1^3")) != three.end());
  CHECK(std::find(three.begin(), three.end(), mono_ideal(3, "x0^2, x0*x1, x1^2")) != three.end());
  CHECK(three.size() == 2);
  CHECK_THROWS_AS(enumerate_borel_by_hf(HilbertFunction{{1, 3, 6, 7, 7, 7, 7}, 7}, 3, 6, 10), ResourceLimit);
}

TEST_CASE("Borel enumeration returns exactly Borel ideals with the Hilbert function") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 15; ++trial) {
    auto base = random_borel(3, 4, 2, rng);
    std::vector<Monomial> gens = base.gens();
    for (int a = 0; a <= 4; ++a) gens.push_back(Monomial{a, 4 - a, 0});  // keep the quotient one-dimensional
    MonomialIdeal j(3, gens);
    const int bound = j.max_degree();
    auto hf = monomial_hilbert(j, bound);
    REQUIRE(hf.stable_value);
    auto all = enumerate_borel_by_hf(hf, 3, bound);
    CHECK(std::find(all.begin(), all.end(), j) != all.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(is_borel_fixed(all[i]));
      CHECK(all[i].max_degree() <= bound);
      CHECK(monomial_hilbert(all[i], bound + 3) == monomial_hilbert(j, bound + 3));
      for (std::size_t k = 0; k < i; ++k) CHECK(!(all[i] == all[k]));
    }
  }
}

TEST_CASE("Fourier-Motzkin examples") {
  std::vector<LinearConstraint> chain{{{1, -1, 0}, true}, {{0, 1, -1}, true}, {{0, 0, 1}, true}};
  auto w = fourier_motzkin(chain, 3);
  REQUIRE(w);
  CHECK(satisfies(chain, *w));

  std::vector<LinearConstraint> cycle{{{1, -1}, true}, {{-1, 1}, true}};
  CHECK(!fourier_motzkin(cycle, 2));

  std::vector<LinearConstraint> tie{{{1, -1}, false}, {{-1, 1}, false}, {{1, 0}, true}};
  auto t = fourier_motzkin(tie, 2);
  REQUIRE(t);
  CHECK((*t)[0] == (*t)[1]);

  std::vector<LinearConstraint> zero{{{0, 0}, true}};
  CHECK(!fourier_motzkin(zero, 2));
}

TEST_CASE("Fourier-Motzkin on random systems") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(3));
    std::vector<std::int64_t> hidden(n);
    for (auto& x : hidden) x = 1 + static_cast<std::int64_t>(rng.below(9));
    std::vector<LinearConstraint> system;
    for (int k = 0; k < 6; ++k) {
      LinearConstraint c{std::vector<std::int64_t>(n), rng.below(2) == 0};
      std::int64_t v = 0;
      for (int i = 0; i < n; ++i) {
        c.coeffs[i] = static_cast<std::int64_t>(rng.below(7)) - 3;
        v += c.coeffs[i] * hidden[i];
      }
      if (v < 0 || (v == 0 && c.strict)) {
        for (auto& x : c.coeffs) x = -x;
        v = -v;
      }
      if (v == 0 && c.strict) continue;
      system.push_back(c);
    }
    auto w = fourier_motzkin(system, n);
    REQUIRE(w);
    CHECK(satisfies(system, *w));
    // adding the negation of a strict constraint makes it infeasible
    for (const auto& c : system) {
      if (!c.strict) continue;
      auto bad = system;
      LinearConstraint neg{c.coeffs, false};
      for (auto& x : neg.coeffs) x = -x;
      bad.push_back(neg);
      CHECK(!fourier_motzkin(bad, n));
      break;
    }
  }
}

TEST_CASE("segment witnesses") {
  auto lex = segment_witness(mono_ideal(3, "x0^2, x0*x1, x0*x2, x1^3"));
  REQUIRE(lex.feasible);
  CHECK(verify_weight(mono_ideal(3, "x0^2, x0*x1, x0*x2, x1^3"), lex.weight, 1, 4));
  for (auto x : lex.weight) CHECK(x > 0);
  CHECK(lex.constraints > 0);

  auto bad = segment_witness(mono_ideal(3, "x0^2, x1^2"));
  CHECK(!bad.feasible);
  CHECK(bad.weight.empty());
}

TEST_CASE("S1 times a small-codimension segment is a segment of the same codimension") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(3));
    const int a = 1 + static_cast<int>(rng.below(6));
    const auto order = rng.below(2) == 0 ? TermOrder::lex() : TermOrder::revlex();
    const std::int64_t total = count_monomials(n, a);
    const std::int64_t u = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(std::min<std::int64_t>(a, total) + 1)));
    auto v = segment_space(n, a, total - u, order);
    std::vector<Monomial> product;
    for (const auto& m : v) {
      for (int i = 0; i < n; ++i) product.push_back(m * Monomial::variable(n, i));
    }
    std::sort(product.begin(), product.end());
    product.erase(std::unique(product.begin(), product.end()), product.end());
    auto expected = segment_space(n, a + 1, count_monomials(n, a + 1) - u, order);
    std::sort(expected.begin(), expected.end());
    CHECK(product == expected);
  }
}
