#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ginlab/monomial_ideal.hpp"
#include "ginlab/term_order.hpp"

namespace ginlab {

/// The u order-greatest monomials of degree d, greatest first.
std::vector<Monomial> segment_space(int nvars, int d, std::int64_t u, const TermOrder& order);

/// dim_k (S/I)_d read from a Hilbert function, using its stable value past the bound.
std::int64_t quotient_dim(const HilbertFunction& hf, int d);

struct SegmentIdeal {
  /// spaces[d] = segment of dimension dim I_d, for d = 0..bound.
  std::vector<std::vector<Monomial>> spaces;
  /// S1 * spaces[d] lies in spaces[d+1] for every d < bound.
  bool is_ideal = false;
  /// Minimal generators of the ideal spanned by all spaces.
  MonomialIdeal ideal;

  bool contains(const Monomial& m) const;
};

/// Per-degree segments with the dimensions of I prescribed by `hf` (a Hilbert
/// function of S/I).
SegmentIdeal segment_ideal_of(const HilbertFunction& hf, const TermOrder& order, int nvars, int bound);

/// The lex ideal with Hilbert function `hf` through degree `bound`. Throws
/// DomainError when the lex segments do not form an ideal (hf is not an O-sequence).
MonomialIdeal lex_ideal_of_hf(const HilbertFunction& hf, int nvars, int bound);

/// Every Borel-fixed ideal generated in degrees <= bound whose Hilbert function
/// is `hf` (including its stable value). Throws ResourceLimit past `max_nodes`
/// search nodes.
std::vector<MonomialIdeal> enumerate_borel_by_hf(const HilbertFunction& hf, int nvars, int bound,
                                                 std::int64_t max_nodes = 50'000'000);

/// Every degree-d monomial of J beats every degree-d monomial outside J, d in [lo, hi].
bool is_segment(const MonomialIdeal& j, const TermOrder& order, int lo, int hi);

/// Same test with the plain weight w: ties between an inside and an outside
/// monomial count as failures.
bool verify_weight(const MonomialIdeal& j, const std::vector<std::int64_t>& w, int lo, int hi);

/// Homogeneous linear constraint sum coeffs[i] * w_i > 0 (strict) or >= 0.
struct LinearConstraint {
  std::vector<std::int64_t> coeffs;
  bool strict = true;
};

/// Exact Fourier–Motzkin feasibility of a homogeneous system. Returns an
/// integer solution with gcd 1, or nothing when the system is infeasible.
/// Throws ResourceLimit when an elimination step exceeds `max_constraints`.
std::optional<std::vector<std::int64_t>> fourier_motzkin(const std::vector<LinearConstraint>& system,
                                                         int nvars, std::size_t max_constraints = 200'000);

struct WeightWitness {
  bool feasible = false;
  std::vector<std::int64_t> weight;  // strictly positive; empty when infeasible
  std::size_t constraints = 0;       // distinct constraints after normalisation
};

/// Looks for a positive weight w making J a segment in degrees [lo, hi]
/// (defaults: 1 and max generator degree + 1).
WeightWitness segment_witness(const MonomialIdeal& j, int lo = -1, int hi = -1);

}  // namespace ginlab
