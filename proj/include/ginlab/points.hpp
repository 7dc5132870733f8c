#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ginlab/groebner.hpp"
#include "ginlab/linalg.hpp"

namespace ginlab {

/// s points of P^r given by homogeneous coordinate tuples of length r+1.
template <class F>
struct PointSet {
  F field;
  int nvars = 0;  // r + 1
  std::vector<std::vector<typename F::Element>> points;
  std::optional<std::uint64_t> seed;

  std::size_t size() const noexcept { return points.size(); }
};

/// s distinct random points with last coordinate 1.
template <class F>
PointSet<F> random_points(int s, int r, std::uint64_t seed, const F& field = F{});

/// Builds a point set from integer coordinates; rejects zero and projectively repeated points.
template <class F>
PointSet<F> make_points(const F& field, const std::vector<std::vector<std::int64_t>>& coords);

/// One point per line, comma-separated integers; blank lines and '#' comments ignored.
template <class F>
PointSet<F> parse_point_file(const F& field, std::string_view text);

/// Seven points of P^3 whose three quadrics share a linear factor.
std::vector<std::vector<std::int64_t>> seven_special_points();
/// The ten points (a, b, c, 1) of P^3 with a, b, c >= 0 and a + b + c <= 2.
std::vector<std::vector<std::int64_t>> ten_lattice_points();

/// Row i = point i, column j = j-th degree-d monomial in lex-descending order.
template <class F>
DenseMatrix<F> evaluation_matrix(const PointSet<F>& points, int d);

/// Ideal of the points from kernels of the evaluation matrices in degrees
/// 1..degree_bound (default: number of points), keeping only minimal generators.
/// Throws DomainError when rank X_s != s.
template <class F>
IdealHandle<F> vanishing_ideal(const PointSet<F>& points, int degree_bound = -1, int threads = 1);

struct GenericityReport {
  struct Degree {
    int degree;
    std::size_t columns;
    bool skipped;  // fewer columns than points
    int samples;
    int failures;
  };
  std::vector<Degree> degrees;
  int total_failures() const {
    int t = 0;
    for (const auto& d : degrees) t += d.failures;
    return t;
  }
};

/// Tests `samples` random s-column subsets of X_d for d = 1..d_max for a
/// nonzero determinant. Degrees with fewer than s columns are skipped.
template <class F>
GenericityReport genericity_spot_check(const PointSet<F>& points, int d_max, int samples,
                                       std::uint64_t seed);

#define GINLAB_POINTS_EXTERN(F)                                                                 \
  extern template struct PointSet<F>;                                                          \
  extern template PointSet<F> random_points(int, int, std::uint64_t, const F&);                \
  extern template PointSet<F> make_points(const F&, const std::vector<std::vector<std::int64_t>>&); \
  extern template PointSet<F> parse_point_file(const F&, std::string_view);                    \
  extern template DenseMatrix<F> evaluation_matrix(const PointSet<F>&, int);                   \
  extern template IdealHandle<F> vanishing_ideal(const PointSet<F>&, int, int);                \
  extern template GenericityReport genericity_spot_check(const PointSet<F>&, int, int, std::uint64_t);

GINLAB_POINTS_EXTERN(PrimeField)
GINLAB_POINTS_EXTERN(RationalField)
#undef GINLAB_POINTS_EXTERN

}  // namespace ginlab
