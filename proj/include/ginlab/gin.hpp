#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ginlab/groebner.hpp"

namespace ginlab {

/// Invertible linear change of coordinates x_i -> sum_j matrix[i][j] x_j.
template <class F>
struct CoordinateChange {
  std::vector<std::vector<typename F::Element>> matrix;
  std::uint64_t seed = 0;
};

/// Uniformly random invertible matrix drawn from `seed`; singular draws are rejected.
template <class F>
CoordinateChange<F> random_coordinate_change(const Ring<F>& ring, std::uint64_t seed);

template <class F>
CoordinateChange<F> identity_change(const Ring<F>& ring);

/// Inverse matrix; throws DomainError when singular.
template <class F>
CoordinateChange<F> inverse_change(const Ring<F>& ring, const CoordinateChange<F>& change);

template <class F>
Polynomial<F> apply_change(const Polynomial<F>& f, const CoordinateChange<F>& change);

/// g.I; throws DomainError for a singular matrix.
template <class F>
IdealHandle<F> apply_change(const IdealHandle<F>& ideal, const CoordinateChange<F>& change);

struct GinOptions {
  int trials = 2;
  std::uint64_t seed = 0;
  int degree_cap = kDefaultDegreeCap;
  /// Worker threads for independent trials (OpenMP); 1 keeps everything serial.
  int jobs = 1;
};

template <class F>
struct GinResult {
  MonomialIdeal gin;
  int trials_used = 0;
  bool agreed = false;
  bool borel = false;
  /// Maximal generator degree; only set for Borel-fixed results.
  std::optional<int> regularity;
  std::vector<std::uint64_t> seeds;
  /// g_i.I for every trial, each carrying its cached Groebner basis.
  std::vector<IdealHandle<F>> transformed;
  /// Index into `transformed` of a trial whose initial ideal equals `gin`.
  int representative = 0;
};

/// in(g.I) over independent random g. Escalates once to one extra trial on
/// disagreement; throws AgreementFailure when no initial ideal has a majority.
template <class F>
GinResult<F> gin(const IdealHandle<F>& ideal, const TermOrder& order, const GinOptions& options = {});

#define GINLAB_GIN_EXTERN(F)                                                                   \
  extern template CoordinateChange<F> random_coordinate_change(const Ring<F>&, std::uint64_t); \
  extern template CoordinateChange<F> identity_change(const Ring<F>&);                        \
  extern template CoordinateChange<F> inverse_change(const Ring<F>&, const CoordinateChange<F>&); \
  extern template Polynomial<F> apply_change(const Polynomial<F>&, const CoordinateChange<F>&); \
  extern template IdealHandle<F> apply_change(const IdealHandle<F>&, const CoordinateChange<F>&); \
  extern template GinResult<F> gin(const IdealHandle<F>&, const TermOrder&, const GinOptions&);

GINLAB_GIN_EXTERN(PrimeField)
GINLAB_GIN_EXTERN(RationalField)
#undef GINLAB_GIN_EXTERN

}  // namespace ginlab
