#include <doctest.h>

#include "ginlab/errors.hpp"
#include "ginlab/points.hpp"
#include "support.hpp"

using namespace testing;

namespace {

template <class F>
bool vanishes_at(const Polynomial<F>& f, const std::vector<typename F::Element>& point) {
  const auto& r = f.ring();
  std::vector<Polynomial<F>> images;
  for (const auto& c : point) {
    std::vector<Term<F>> t;
    if (!r->field().is_zero(c)) t.push_back({Monomial(r->nvars()), c});
    images.push_back(Polynomial<F>::from_terms(r, std::move(t)));
  }
  return f.substitute(images).is_zero();
}

template <class F>
void check_vanishing_ideal(const PointSet<F>& pts, int threads = 1) {
  auto I = vanishing_ideal(pts, -1, threads);
  for (const auto& g : I.gens()) {
    for (const auto& p : pts.points) CHECK(vanishes_at(g, p));
  }
  const int s = static_cast<int>(pts.size());
  auto hf = hilbert_function(I, TermOrder::revlex(), s + 1);
  for (int d = 0; d <= s + 1; ++d) CHECK(hf[d] == static_cast<std::int64_t>(rank(evaluation_matrix(pts, d))));
  CHECK(hf.stable_value == s);
}

}  // namespace

TEST_CASE("fixtures") {
  auto seven = seven_special_points();
  auto ten = ten_lattice_points();
  CHECK(seven.size() == 7);
  CHECK(ten.size() == 10);
  for (const auto& p : ten) {
    CHECK(p.size() == 4);
    CHECK(p[3] == 1);
    CHECK(p[0] + p[1] + p[2] <= 2);
  }
  CHECK_NOTHROW(make_points(Fp{}, seven));
  CHECK_NOTHROW(make_points(QQ{}, ten));
}

TEST_CASE("make_points validates") {
  CHECK_THROWS(make_points(Fp{}, {{1, 2, 3}, {2, 4, 6}}));
  CHECK_THROWS(make_points(Fp{}, {{0, 0, 0}}));
  CHECK_THROWS(make_points(Fp{}, {{1, 2, 3}, {1, 2}}));
  CHECK_THROWS(make_points(Fp{}, {{1}}));
  CHECK_NOTHROW(make_points(Fp{}, {{1, 2, 3}, {1, 2, 4}}));
}

TEST_CASE("parse_point_file") {
  auto pts = parse_point_file(QQ{}, "# three points\n1, 0, 0\n\n0,1,0  # second\n0, 0, 1\n");
  CHECK(pts.size() == 3);
  CHECK(pts.nvars == 3);
  CHECK(pts.points[1][1] == 1);
  CHECK_THROWS(parse_point_file(QQ{}, "1, x, 0\n"));
  CHECK_THROWS(parse_point_file(QQ{}, "1, 0\n0, 0, 1\n"));
}

TEST_CASE("evaluation matrix uses lex-descending columns") {
  auto pts = make_points(QQ{}, {{1, 2, 3}});
  auto x = evaluation_matrix(pts, 2);
  REQUIRE(x.cols() == 6);
  // x0^2, x0x1, x0x2, x1^2, x1x2, x2^2
  std::vector<mpq_class> want{1, 2, 3, 4, 6, 9};
  for (std::size_t j = 0; j < 6; ++j) CHECK(x(0, j) == want[j]);
  CHECK(evaluation_matrix(pts, 0)(0, 0) == 1);
}

TEST_CASE("random points are seeded and distinct") {
  auto a = random_points<Fp>(8, 2, 4);
  auto b = random_points<Fp>(8, 2, 4);
  CHECK(a.points == b.points);
  CHECK(a.points != random_points<Fp>(8, 2, 5).points);
  CHECK(a.nvars == 3);
  for (const auto& p : a.points) CHECK(p[2] == 1);
}

TEST_CASE("vanishing ideal of random points has the generic Hilbert function") {
  for (int r : {2, 3}) {
    for (int s = 1; s <= 9; ++s) {
      auto pts = random_points<Fp>(s, r, 100 + s);
      auto I = vanishing_ideal(pts);
      auto hf = hilbert_function(I, TermOrder::revlex(), s + 1);
      for (int d = 0; d <= s + 1; ++d) CHECK(hf[d] == std::min<std::int64_t>(s, count_monomials(r + 1, d)));
    }
  }
}

TEST_CASE("vanishing ideals agree with evaluation-matrix ranks") {
  check_vanishing_ideal(make_points(QQ{}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  check_vanishing_ideal(make_points(Fp{}, seven_special_points()));
  check_vanishing_ideal(make_points(Fp{}, ten_lattice_points()));
  check_vanishing_ideal(make_points(QQ{}, {{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}}));  // collinear
  check_vanishing_ideal(random_points<QQ>(5, 2, 8));
}

TEST_CASE("vanishing ideal of three coordinate points") {
  auto r = ring<QQ>(3);
  auto I = vanishing_ideal(make_points(QQ{}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(ideal_equal(I, ideal(r, "x0*x1, x0*x2, x1*x2"), TermOrder::revlex()));
  CHECK(I.gens().size() == 3);
}

TEST_CASE("special fixtures have the expected Hilbert functions") {
  auto seven = vanishing_ideal(make_points(Fp{}, seven_special_points()));
  CHECK(hilbert_function(seven, TermOrder::revlex(), 4).dims == std::vector<std::int64_t>{1, 4, 7, 7, 7});
  auto ten = vanishing_ideal(make_points(Fp{}, ten_lattice_points()));
  CHECK(hilbert_function(ten, TermOrder::revlex(), 4).dims == std::vector<std::int64_t>{1, 4, 10, 10, 10});
}

TEST_CASE("genericity spot check") {
  auto generic = genericity_spot_check(random_points<Fp>(6, 2, 1), 4, 50, 2);
  CHECK(generic.total_failures() == 0);
  REQUIRE(generic.degrees.size() == 4);
  CHECK(generic.degrees[0].skipped);  // 3 columns < 6 points
  CHECK(generic.degrees[1].columns == 6);
  CHECK(generic.degrees[1].samples == 1);  // exhaustive: C(6, 6)

  auto seven = genericity_spot_check(make_points(Fp{}, seven_special_points()), 2, 200, 3);
  CHECK(seven.degrees[1].samples == 120);
  CHECK(seven.degrees[1].failures == 118);

  auto sampled = genericity_spot_check(random_points<Fp>(6, 2, 1), 4, 10, 2);
  CHECK(sampled.degrees[3].samples == 10);
}

TEST_CASE("vanishing ideal rejects a too-small degree bound") {
  auto pts = make_points(QQ{}, {{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}});
  CHECK_THROWS_AS(vanishing_ideal(pts, 2), std::invalid_argument);
}
