#include <doctest.h>

#include "ginlab/errors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

template <class F>
typename F::Element det(const Ring<F>& r, const CoordinateChange<F>& g) {
  const auto n = static_cast<std::size_t>(r->nvars());
  DenseMatrix<F> m(r->field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = g.matrix[i][j];
  }
  return determinant(std::move(m));
}

}  // namespace

TEST_CASE("random coordinate changes are seeded and invertible") {
  auto r = ring(4);
  CHECK(random_coordinate_change(r, 5).matrix == random_coordinate_change(r, 5).matrix);
  CHECK(random_coordinate_change(r, 5).matrix != random_coordinate_change(r, 6).matrix);
  for (std::uint64_t s = 0; s < 1000; ++s) CHECK(!r->field().is_zero(det(r, random_coordinate_change(r, s))));

  auto rq = ring<QQ>(3);
  auto g = random_coordinate_change(rq, 1);
  for (const auto& row : g.matrix) {
    for (const auto& x : row) {
      CHECK(x.get_den() == 1);
      CHECK(abs(x) <= 1000000);
    }
  }
}

TEST_CASE("apply_change: identity, inverse and singular matrices") {
  auto r = ring<QQ>(3);
  auto I = ideal(r, "x0^2 - x1*x2, x1^3 + x0*x2^2");
  auto same = apply_change(I, identity_change(r));
  CHECK(same.gens() == I.gens());
  auto g = random_coordinate_change(r, 11);
  auto back = apply_change(apply_change(I, g), inverse_change(r, g));
  CHECK(ideal_equal(back, I, TermOrder::revlex()));
  CoordinateChange<QQ> singular{std::vector<std::vector<mpq_class>>(3, std::vector<mpq_class>(3, 1)), 0};
  CHECK_THROWS_AS(apply_change(I, singular), DomainError);
  CHECK_THROWS_AS(inverse_change(r, singular), DomainError);
}

TEST_CASE("Hilbert function is invariant under 50 coordinate changes") {
  auto r = ring(4);
  SplitMix64 rng(2);
  IdealHandle<Fp> ci(r, {random_form(r, 2, rng, 4), random_form(r, 2, rng, 4)});
  const auto hf = hilbert_function(ci, TermOrder::revlex(), 8);
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto moved = apply_change(ci, random_coordinate_change(r, 1000 + s));
    CHECK(hilbert_function(moved, TermOrder::revlex(), 8) == hf);
  }
}

TEST_CASE("is_borel_fixed examples") {
  CHECK(is_borel_fixed(mono_ideal(3, "x0^2, x0*x1, x1^3")));
  CHECK(!is_borel_fixed(mono_ideal(3, "x0*x2")));
  CHECK(is_borel_fixed(mono_ideal(3, "x0")));
  CHECK(!is_borel_fixed(mono_ideal(2, "x1")));
}

TEST_CASE("gin of three points of P^2") {
  auto r = ring(3);
  // [1:0:0], [0:1:0], [0:0:1] are not in generic position, but their gin is
  auto result = gin(ideal(r, "x0*x1, x0*x2, x1*x2"), TermOrder::lex());
  CHECK(result.gin == mono_ideal(3, "x0^2, x0*x1, x0*x2, x1^3"));
  CHECK(result.regularity == 3);
  CHECK(result.agreed);
  CHECK(result.borel);
  CHECK(result.trials_used == 2);
}

TEST_CASE("gin of a generic (2,2) complete intersection") {
  auto r = ring(4);
  SplitMix64 rng(4);
  IdealHandle<Fp> ci(r, {random_form(r, 2, rng), random_form(r, 2, rng)});
  auto lex = gin(ci, TermOrder::lex());
  CHECK(lex.gin == mono_ideal(4, "x0^2, x0*x1, x0*x2^2, x1^4"));
  CHECK(lex.regularity == 4);
  auto revlex = gin(ci, TermOrder::revlex());
  CHECK(revlex.gin == mono_ideal(4, "x0^2, x0*x1, x1^3"));
  CHECK(monomial_hilbert(lex.gin, 6) == hilbert_function(ci, TermOrder::revlex(), 6));
}

TEST_CASE("gin of a Borel-fixed monomial ideal is itself") {
  auto r = ring<QQ>(3);
  auto result = gin(ideal(r, "x0^2, x0*x1, x1^3"), TermOrder::lex());
  CHECK(result.gin == mono_ideal(3, "x0^2, x0*x1, x1^3"));
}

TEST_CASE("gin over QQ matches the prime field") {
  const char* text = "x0^2 - x1*x2, x1^2 - x0*x2";
  auto q = gin(ideal(ring<QQ>(3), text), TermOrder::lex());
  auto p = gin(ideal(ring(3), text), TermOrder::lex());
  CHECK(q.gin == p.gin);
}

TEST_CASE("parallel trials give the serial answer") {
  auto r = ring(4);
  SplitMix64 rng(6);
  IdealHandle<Fp> ci(r, {random_form(r, 2, rng), random_form(r, 3, rng)});
  GinOptions serial{3, 42, kDefaultDegreeCap, 1};
  GinOptions parallel{3, 42, kDefaultDegreeCap, 3};
  auto a = gin(ci, TermOrder::lex(), serial);
  auto b = gin(ci, TermOrder::lex(), parallel);
  CHECK(a.gin == b.gin);
  CHECK(a.seeds == b.seeds);
  CHECK(a.regularity == 7);
}

TEST_CASE("gin options are validated") {
  auto r = ring(3);
  CHECK_THROWS(gin(ideal(r, "x0"), TermOrder::lex(), GinOptions{1, 0, kDefaultDegreeCap, 1}));
}
