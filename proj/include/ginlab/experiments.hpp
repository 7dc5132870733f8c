#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ginlab/gin.hpp"
#include "ginlab/partial_elim.hpp"
#include "ginlab/points.hpp"
#include "ginlab/segments.hpp"
#include "ginlab/sylvester.hpp"

namespace ginlab {

struct ExperimentOptions {
  std::uint64_t seed = 0;
  int degree_cap = kDefaultDegreeCap;
  int trials = 2;
  int jobs = 1;
  /// Wall-clock timings make reports non-reproducible, so they are opt-in.
  bool timing = false;

  GinOptions gin_options() const { return {trials, seed, degree_cap, jobs}; }
};

/// A JSON tree (object keys sorted) plus the verdict of its expectation checks.
struct ExperimentReport {
  nlohmann::json data = nlohmann::json::object();
  bool passed = true;

  /// Records checks[name] = {expected, actual, ok}.
  void expect(const std::string& name, const nlohmann::json& expected, const nlohmann::json& actual);
  /// Records a boolean invariant that must hold.
  void require(const std::string& name, bool ok) { expect(name, true, ok); }
  std::string dump() const { return data.dump(2) + "\n"; }
};

nlohmann::json to_json(const MonomialIdeal& j);
nlohmann::json to_json(const HilbertFunction& hf);
nlohmann::json to_json(const TermOrder& order);

/// Random form of degree d whose x0^d coefficient is 1.
template <class F>
Polynomial<F> random_monic_form(const Ring<F>& ring, int d, SplitMix64& rng);
/// Random form of degree d with every coefficient drawn from the field.
template <class F>
Polynomial<F> random_form(const Ring<F>& ring, int d, SplitMix64& rng);

/// gin of an arbitrary ideal with its Borel/regularity verdicts.
template <class F>
ExperimentReport gin_report(const IdealHandle<F>& ideal, const TermOrder& order,
                            const ExperimentOptions& options);

/// Partial elimination tower of an ideal with the decomposition checks.
template <class F>
ExperimentReport pei_report(const IdealHandle<F>& ideal, int p_max, const TermOrder& inner,
                            const ExperimentOptions& options);

/// syl_p(f, g): minors, unit reduction, regularity formulas, codimension and
/// comparison with K_p((f, g)).
template <class F>
ExperimentReport sylvester_report(const Polynomial<F>& f, const Polynomial<F>& g, int p,
                                  const ExperimentOptions& options);

/// Segment witness search and lex/revlex segment tests for a monomial ideal.
ExperimentReport segment_report(const MonomialIdeal& j, int lo = -1, int hi = -1);

/// Complete intersection of random forms of degrees a <= b in P^3: gin_lex,
/// its regularity, and the K_0 / K_1 data of the partial elimination tower.
template <class F>
ExperimentReport experiment_curve(int a, int b, const F& field, const ExperimentOptions& options);

/// gin versus segment ideal for a point set, per order.
template <class F>
ExperimentReport point_set_report(const PointSet<F>& points, const std::vector<TermOrder>& orders,
                                  const ExperimentOptions& options);

/// point_set_report on s random points of P^r.
template <class F>
ExperimentReport experiment_points(int s, int r, const std::vector<TermOrder>& orders, const F& field,
                                   const ExperimentOptions& options);

/// The curve (x0^3 - x1 x2^2, x1^3 - x2^2 x3) with a cusp-like singularity.
template <class F>
ExperimentReport experiment_nonsmooth(const F& field, const ExperimentOptions& options);

/// All Borel-fixed ideals with Hilbert function 1, 3, 6, 7, 7, ... in three
/// variables, checked against the known list and for weight witnesses.
ExperimentReport experiment_borel_census(const ExperimentOptions& options);

#define GINLAB_EXP_EXTERN(F)                                                                    \
  extern template Polynomial<F> random_monic_form(const Ring<F>&, int, SplitMix64&);          \
  extern template Polynomial<F> random_form(const Ring<F>&, int, SplitMix64&);                \
  extern template ExperimentReport gin_report(const IdealHandle<F>&, const TermOrder&,         \
                                              const ExperimentOptions&);                       \
  extern template ExperimentReport pei_report(const IdealHandle<F>&, int, const TermOrder&,    \
                                              const ExperimentOptions&);                       \
  extern template ExperimentReport sylvester_report(const Polynomial<F>&, const Polynomial<F>&, \
                                                    int, const ExperimentOptions&);            \
  extern template ExperimentReport experiment_curve(int, int, const F&, const ExperimentOptions&); \
  extern template ExperimentReport point_set_report(const PointSet<F>&,                        \
                                                    const std::vector<TermOrder>&,             \
                                                    const ExperimentOptions&);                 \
  extern template ExperimentReport experiment_points(int, int, const std::vector<TermOrder>&,  \
                                                     const F&, const ExperimentOptions&);      \
  extern template ExperimentReport experiment_nonsmooth(const F&, const ExperimentOptions&);

GINLAB_EXP_EXTERN(PrimeField)
GINLAB_EXP_EXTERN(RationalField)
#undef GINLAB_EXP_EXTERN

}  // namespace ginlab
