#include <doctest.h>

#include "ginlab/partial_elim.hpp"
#include "ginlab/points.hpp"
#include "ginlab/sylvester.hpp"
#include "support.hpp"

using namespace testing;

namespace {

template <class F>
DenseMatrix<F> random_matrix(const F& field, std::size_t m, std::size_t n, std::size_t rank_hint, SplitMix64& rng) {
  // rows beyond rank_hint are combinations of earlier rows
  DenseMatrix<F> a(field, m, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (i < rank_hint) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = field.random(rng);
    } else {
      for (std::size_t k = 0; k < rank_hint; ++k) {
        auto c = field.random(rng);
        for (std::size_t j = 0; j < n; ++j) a(i, j) = field.add(a(i, j), field.mul(c, a(k, j)));
      }
    }
  }
  return a;
}

template <class F>
bool same(const DenseMatrix<F>& a, const DenseMatrix<F>& b) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!(a(i, j) == b(i, j))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("row reduction: parallel equals serial") {
  SplitMix64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 5 + rng.below(40), n = 5 + rng.below(60), r = 1 + rng.below(std::min(m, n));
    auto a = random_matrix(Fp{}, m, n, r, rng);
    auto b = a;
    auto pa = row_reduce_serial(a);
    for (int threads : {2, 4}) {
      auto c = b;
      auto pc = row_reduce_parallel(c, threads);
      CHECK(pa == pc);
      CHECK(same(a, c));
    }
    CHECK(pa.size() == r);
  }
  for (int trial = 0; trial < 5; ++trial) {
    auto a = random_matrix(QQ{}, 12, 15, 7, rng);
    auto b = a;
    CHECK(row_reduce_serial(a) == row_reduce_parallel(b, 3));
    CHECK(same(a, b));
  }
}

TEST_CASE("nullspace: parallel equals serial and is a kernel") {
  SplitMix64 rng(2);
  Fp k;
  auto a = random_matrix(k, 20, 30, 12, rng);
  auto serial = nullspace(a, 1);
  CHECK(serial.size() == 18);
  CHECK(nullspace(a, 4) == serial);
  for (const auto& v : serial) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      auto acc = k.zero();
      for (std::size_t j = 0; j < a.cols(); ++j) acc = k.add(acc, k.mul(a(i, j), v[j]));
      CHECK(k.is_zero(acc));
    }
  }
}

TEST_CASE("maximal minors: parallel equals serial") {
  auto r = ring(4);
  SplitMix64 rng(3);
  PolyMatrix<Fp> m(small_ring(r), 4, 7);
  for (auto& e : m.entries) e = random_form(m.ring, 1, rng, 3);
  auto serial = maximal_minors_serial(m);
  CHECK(maximal_minors_parallel(m, 2) == serial);
  CHECK(maximal_minors_parallel(m, 8) == serial);
}

TEST_CASE("vanishing ideal: thread count does not change the generators") {
  auto pts = random_points<Fp>(9, 2, 7);
  auto serial = vanishing_ideal(pts, -1, 1);
  auto parallel = vanishing_ideal(pts, -1, 4);
  CHECK(serial.gens() == parallel.gens());
}

TEST_CASE("gin: jobs do not change the answer") {
  auto pts = random_points<Fp>(6, 3, 9);
  auto I = vanishing_ideal(pts);
  auto a = gin(I, TermOrder::revlex(), GinOptions{4, 1, kDefaultDegreeCap, 1});
  auto b = gin(I, TermOrder::revlex(), GinOptions{4, 1, kDefaultDegreeCap, 4});
  CHECK(a.gin == b.gin);
  CHECK(a.seeds == b.seeds);
  CHECK(a.regularity == b.regularity);
}
