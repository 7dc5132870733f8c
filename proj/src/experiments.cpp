#include "ginlab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace ginlab {

using nlohmann::json;

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(const ExperimentOptions& options) : enabled_(options.timing) {}
  void stamp(ExperimentReport& report, const std::string& what) {
    if (!enabled_) return;
    auto now = std::chrono::steady_clock::now();
    report.data["timing_seconds"][what] = std::chrono::duration<double>(now - start_).count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json echo(const ExperimentOptions& o, const std::string& field) {
  return {{"seed", o.seed}, {"degree_cap", o.degree_cap}, {"trials", o.trials}, {"field", field}};
}

template <class F>
json polys_json(const std::vector<Polynomial<F>>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

json gin_json(const MonomialIdeal& gin, int trials_used, bool agreed, bool borel,
              const std::optional<int>& regularity, const std::vector<std::uint64_t>& seeds) {
  json j = {{"generators", to_json(gin)},
            {"trials_used", trials_used},
            {"agreed", agreed},
            {"borel", borel},
            {"seeds", seeds},
            {"max_generator_degree", gin.max_degree()}};
  j["regularity"] = regularity ? json(*regularity) : json(nullptr);
  return j;
}

template <class F>
json gin_json(const GinResult<F>& r) {
  return gin_json(r.gin, r.trials_used, r.agreed, r.borel, r.regularity, r.seeds);
}

template <class F>
json tower_json(const PartialElimTower<F>& tower) {
  json levels = json::array();
  for (int p = 0; p <= tower.p_max(); ++p) {
    const auto series = hilbert_series(tower.initial[p]);
    levels.push_back({{"p", p},
                      {"initial", to_json(tower.initial[p])},
                      {"generators", tower.levels[p].size()},
                      {"dimension", series.dimension},
                      {"degree", series.degree}});
  }
  return {{"inner_order", to_json(tower.inner)}, {"levels", levels}};
}

template <class F>
void check_tower(ExperimentReport& report, const PartialElimTower<F>& tower) {
  report.require("decomposition", check_decomposition(tower));
  report.require("ascending", check_ascending(tower));
  report.require("commutation", check_commutation(tower));
}

}  // namespace

void ExperimentReport::expect(const std::string& name, const json& expected, const json& actual) {
  const bool ok = expected == actual;
  data["checks"][name] = {{"expected", expected}, {"actual", actual}, {"ok", ok}};
  passed = passed && ok;
}

json to_json(const MonomialIdeal& j) { return j.to_strings(); }

json to_json(const HilbertFunction& hf) {
  json j = {{"values", hf.dims}};
  j["stable_value"] = hf.stable_value ? json(*hf.stable_value) : json(nullptr);
  return j;
}

json to_json(const TermOrder& order) { return order.to_string(); }

template <class F>
Polynomial<F> random_monic_form(const Ring<F>& ring, int d, SplitMix64& rng) {
  std::vector<Term<F>> terms;
  for (const auto& m : monomials_of_degree(ring->nvars(), d)) {
    terms.push_back({m, m[0] == d ? ring->field().one() : ring->field().random(rng)});
  }
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

template <class F>
Polynomial<F> random_form(const Ring<F>& ring, int d, SplitMix64& rng) {
  std::vector<Term<F>> terms;
  for (const auto& m : monomials_of_degree(ring->nvars(), d)) terms.push_back({m, ring->field().random(rng)});
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

template <class F>
ExperimentReport gin_report(const IdealHandle<F>& ideal, const TermOrder& order,
                            const ExperimentOptions& options) {
  ExperimentReport report;
  Stopwatch clock(options);
  report.data["input"] = echo(options, ideal.ring()->field().name());
  report.data["input"]["order"] = to_json(order);
  report.data["input"]["generators"] = polys_json(ideal.gens());
  auto result = gin(ideal, order, options.gin_options());
  report.data["gin"] = gin_json(result);
  report.require("agreement", result.agreed);
  report.require("borel", result.borel);
  clock.stamp(report, "total");
  return report;
}

template <class F>
ExperimentReport pei_report(const IdealHandle<F>& ideal, int p_max, const TermOrder& inner,
                            const ExperimentOptions& options) {
  ExperimentReport report;
  Stopwatch clock(options);
  report.data["input"] = echo(options, ideal.ring()->field().name());
  report.data["input"]["generators"] = polys_json(ideal.gens());
  report.data["input"]["p_max"] = p_max;
  auto tower = partial_elim_ideals(ideal, p_max, inner, options.degree_cap);
  report.data["tower"] = tower_json(tower);
  for (int p = 0; p <= tower.p_max(); ++p) {
    report.data["tower"]["levels"][p]["basis"] = polys_json(tower.levels[p]);
  }
  report.data["big_initial"] = to_json(tower.big_initial);
  check_tower(report, tower);
  clock.stamp(report, "total");
  return report;
}

template <class F>
ExperimentReport sylvester_report(const Polynomial<F>& f, const Polynomial<F>& g, int p,
                                  const ExperimentOptions& options) {
  ExperimentReport report;
  Stopwatch clock(options);
  report.data["input"] = echo(options, f.field().name());
  report.data["input"]["f"] = f.to_string();
  report.data["input"]["g"] = g.to_string();
  report.data["input"]["p"] = p;

  const int a = f.degree(), b = g.degree();
  auto m = build_sylp(f, g, p);
  MinorStats stats;
  auto minors = maximal_minors_ideal(m, options.jobs, &stats);
  auto reduced = unit_reduce(m);
  report.data["matrix"] = {{"rows", m.rows}, {"cols", m.cols}, {"minors", stats.total}, {"zero_minors", stats.zero}};
  report.data["reduced"] = {{"rows", reduced.rows},
                            {"cols", reduced.cols},
                            {"row_degrees", *reduced.row_degrees},
                            {"col_degrees", *reduced.col_degrees}};
  report.require("ledger", m.ledger_consistent());
  report.require("reduced_ledger", reduced.ledger_consistent());

  const int codim = codimension(minors, options.degree_cap);
  report.data["codimension"] = codim;
  // expected codimension p + 1, capped by the three variables of the small ring
  report.expect("codimension", std::min(p + 1, m.ring->nvars()), codim);

  const bool shape_ok = reduced.rows == static_cast<std::size_t>(a - p) && reduced.cols == static_cast<std::size_t>(a);
  bool degrees_ok = shape_ok;
  for (std::size_t i = 0; i < reduced.rows && degrees_ok; ++i) {
    for (std::size_t j = 0; j < reduced.cols; ++j) {
      const auto& e = reduced.at(i, j);
      if (!e.is_zero() && (!e.is_homogeneous() || e.degree() != b + static_cast<int>(i) - static_cast<int>(j))) {
        degrees_ok = false;
      }
    }
  }
  report.require("reduced_shape_and_degrees", degrees_ok);
  report.require("unit_reduce_keeps_minors",
                 ideal_equal(minors, maximal_minors_ideal(reduced, options.jobs), TermOrder::revlex(),
                             options.degree_cap));

  if (reduced.rows > 0 && reduced.rows <= reduced.cols) {
    auto g_revlex = gin(minors, TermOrder::revlex(), options.gin_options());
    report.data["gin_revlex"] = gin_json(g_revlex);
    const int en = en_regularity(*reduced.row_degrees, *reduced.col_degrees);
    report.data["en_regularity"] = en;
    if (g_revlex.regularity) report.expect("en_regularity", en, *g_revlex.regularity);
    if (p >= 1 && p < a && a <= b) {
      const int kp = kp_regularity_formula(a, b, p);
      report.data["formula_regularity"] = kp;
      if (g_revlex.regularity) report.expect("formula_regularity", kp, *g_revlex.regularity);
    }
  }

  IdealHandle<F> ideal(f.ring(), {f, g});
  auto tower = partial_elim_ideals(ideal, p, TermOrder::revlex(), options.degree_cap);
  if (p <= tower.p_max()) {
    auto kp = tower.level(p);
    bool contained = true;
    for (const auto& h : minors.gens()) contained = contained && kp.contains(h, TermOrder::revlex(), options.degree_cap);
    report.require("minors_in_K_p", contained);
    // equality is only expected while p <= r - 2
    if (p <= m.ring->nvars() - 2) {
      report.expect("minors_equal_K_p", true, ideal_equal(minors, kp, TermOrder::revlex(), options.degree_cap));
    }
  }
  clock.stamp(report, "total");
  return report;
}

ExperimentReport segment_report(const MonomialIdeal& j, int lo, int hi) {
  ExperimentReport report;
  if (lo < 0) lo = 1;
  if (hi < 0) hi = std::max(j.max_degree(), 0) + 1;
  report.data["input"] = {{"generators", to_json(j)}, {"degree_range", {lo, hi}}};
  report.data["borel"] = is_borel_fixed(j);
  report.data["lex_segment"] = is_segment(j, TermOrder::lex(), lo, hi);
  report.data["revlex_segment"] = is_segment(j, TermOrder::revlex(), lo, hi);
  auto w = segment_witness(j, lo, hi);
  report.data["witness"] = {{"feasible", w.feasible}, {"constraints", w.constraints}};
  report.data["witness"]["weight"] = w.feasible ? json(w.weight) : json(nullptr);
  if (w.feasible) report.require("witness_verifies", verify_weight(j, w.weight, lo, hi));
  return report;
}

template <class F>
ExperimentReport experiment_curve(int a, int b, const F& field, const ExperimentOptions& options) {
  if (!(2 <= a && a <= b)) throw std::invalid_argument("need 2 <= a <= b");
  ExperimentReport report;
  Stopwatch clock(options);
  report.data["input"] = echo(options, field.name());
  report.data["input"]["a"] = a;
  report.data["input"]["b"] = b;

  auto ring = RingContext<F>::create(4, field);
  SplitMix64 rng(derive_seed(options.seed, 0xc0));
  auto f = random_form(ring, a, rng);
  auto g = random_form(ring, b, rng);
  IdealHandle<F> ideal(ring, {f, g});

  auto result = gin(ideal, TermOrder::lex(), options.gin_options());
  clock.stamp(report, "gin");
  report.data["gin_lex"] = gin_json(result);
  report.require("agreement", result.agreed);
  report.require("borel", result.borel);
  const int expected_reg = (a == 2 && b == 2) ? 4 : 1 + a * b * (a - 1) * (b - 1) / 2;
  report.expect("regularity", expected_reg, result.regularity ? json(*result.regularity) : json(nullptr));

  // the lex basis of g.I is already an elimination basis for x0
  const auto& moved = result.transformed[result.representative];
  auto tower = partial_elim_ideals(moved, -1, TermOrder::lex(), options.degree_cap);
  report.data["tower"] = tower_json(tower);
  check_tower(report, tower);
  report.expect("tower_matches_gin", true, tower.big_initial == result.gin);

  json k0_degrees = json::array();
  for (const auto& h : tower.levels[0]) k0_degrees.push_back(h.degree());
  report.expect("K0_generator_degrees", json::array({a * b}), k0_degrees);
  const int nodes = a * b * (a - 1) * (b - 1) / 2;
  if (tower.p_max() >= 1) {
    const int distinct = count_distinct_points(tower.level(1), derive_seed(options.seed, 0xd1), options.degree_cap);
    report.data["K1_distinct_points"] = distinct;
    report.expect("K1_distinct_points", nodes, distinct);
  } else {
    report.expect("K1_distinct_points", nodes, nullptr);
  }
  clock.stamp(report, "total");
  return report;
}

template <class F>
ExperimentReport point_set_report(const PointSet<F>& points, const std::vector<TermOrder>& orders,
                                  const ExperimentOptions& options) {
  ExperimentReport report;
  Stopwatch clock(options);
  const int s = static_cast<int>(points.size());
  const int n = points.nvars;
  report.data["input"] = echo(options, points.field.name());
  report.data["input"]["points"] = s;
  report.data["input"]["projective_dimension"] = n - 1;
  if (points.seed) report.data["input"]["point_seed"] = *points.seed;

  auto ideal = vanishing_ideal(points, s, options.jobs);
  const int bound = s + 1;
  auto hf = hilbert_function(ideal, TermOrder::revlex(), bound, options.degree_cap);
  report.data["hilbert_function"] = to_json(hf);
  report.data["ideal_generator_degrees"] = json::array();
  for (const auto& g : ideal.gens()) report.data["ideal_generator_degrees"].push_back(g.degree());
  std::vector<std::int64_t> generic;
  for (int d = 0; d <= bound; ++d) generic.push_back(std::min<std::int64_t>(s, count_monomials(n, d)));
  report.data["generic_hilbert_function"] = generic == hf.dims;

  report.data["orders"] = json::object();
  for (const auto& order : orders) {
    auto result = gin(ideal, order, options.gin_options());
    auto seg = segment_ideal_of(hf, order, n, bound);
    json entry = {{"gin", gin_json(result)},
                  {"segment", to_json(seg.ideal)},
                  {"segment_is_ideal", seg.is_ideal},
                  {"gin_equals_segment", seg.is_ideal && seg.ideal == result.gin}};
    entry["gin_degree_2"] = to_json(MonomialIdeal(n, result.gin.monomials_in_degree(2)));
    json extra = json::array(), missing = json::array();
    for (int d = 0; d <= bound; ++d) {
      for (const auto& m : monomials_of_degree(n, d)) {
        const bool in_gin = result.gin.contains(m), in_seg = seg.contains(m);
        if (in_gin && !in_seg) extra.push_back(m.to_string());
        if (!in_gin && in_seg) missing.push_back(m.to_string());
      }
    }
    entry["gin_not_segment"] = extra;
    entry["segment_not_gin"] = missing;
    const std::string key = order.to_string();
    report.data["orders"][key] = entry;
    report.require(key + "_agreement", result.agreed);
    report.require(key + "_borel", result.borel);
    if (order.kind() == TermOrder::Kind::Lex) {
      report.data["orders"][key]["last_power_is_generator"] = [&] {
        auto last = Monomial::variable(n, n - 2, s);
        const auto& gens = result.gin.gens();
        return std::find(gens.begin(), gens.end(), last) != gens.end();
      }();
    }
  }
  clock.stamp(report, "total");
  return report;
}

template <class F>
ExperimentReport experiment_points(int s, int r, const std::vector<TermOrder>& orders, const F& field,
                                   const ExperimentOptions& options) {
  auto points = random_points(s, r, derive_seed(options.seed, 0x9e), field);
  auto report = point_set_report(points, orders, options);
  report.require("generic_hilbert_function", report.data["generic_hilbert_function"].template get<bool>());
  for (const auto& order : orders) {
    const auto key = order.to_string();
    const auto& entry = report.data["orders"][key];
    report.require(key + "_gin_equals_segment", entry["gin_equals_segment"].template get<bool>());
    if (order.kind() == TermOrder::Kind::Lex) {
      report.expect(key + "_regularity", s, entry["gin"]["max_generator_degree"]);
      report.require(key + "_last_power_is_generator", entry["last_power_is_generator"].template get<bool>());
    }
  }
  return report;
}

template <class F>
ExperimentReport experiment_nonsmooth(const F& field, const ExperimentOptions& options) {
  ExperimentReport report;
  Stopwatch clock(options);
  report.data["input"] = echo(options, field.name());
  auto ring = RingContext<F>::create(4, field);
  IdealHandle<F> ideal(ring, parse_polynomial_list(ring, "x0^3 - x1*x2^2, x1^3 - x2^2*x3"));
  report.data["input"]["generators"] = polys_json(ideal.gens());

  auto result = gin(ideal, TermOrder::lex(), options.gin_options());
  clock.stamp(report, "gin");
  report.data["gin_lex"] = gin_json(result);
  report.require("agreement", result.agreed);
  report.require("borel", result.borel);
  report.expect("regularity", 16, result.regularity ? json(*result.regularity) : json(nullptr));

  const auto& moved = result.transformed[result.representative];
  auto tower = partial_elim_ideals(moved, -1, TermOrder::lex(), options.degree_cap);
  report.data["tower"] = tower_json(tower);
  check_tower(report, tower);
  if (tower.p_max() >= 1) {
    report.expect("K1_degree", 18, hilbert_series(tower.initial[1]).degree);
    report.expect("K1_distinct_points", 11,
                  count_distinct_points(tower.level(1), derive_seed(options.seed, 0xd1), options.degree_cap));
  }
  clock.stamp(report, "total");
  return report;
}

ExperimentReport experiment_borel_census(const ExperimentOptions& options) {
  ExperimentReport report;
  Stopwatch clock(options);
  const int n = 3, bound = 10;
  HilbertFunction hf{{1, 3, 6}, 7};
  for (int d = 3; d <= bound; ++d) hf.dims.push_back(7);
  report.data["input"] = {{"hilbert_function", to_json(hf)}, {"variables", n}, {"bound", bound}};

  // The known list, in order; weights mark the ideals that are segments.
  struct Known {
    const char* gens;
    std::optional<std::vector<std::int64_t>> weight;
    bool segment;
  };
  const std::vector<Known> known = {
      {"x^3, x^2*y, x^2*z, x*y^3, x*y^2*z, x*y*z^3, x*z^5, y^7", std::nullopt, true},
      {"x^3, x^2*y, x^2*z, x*y^3, x*y^2*z, x*y*z^3, y^6", std::vector<std::int64_t>{6, 2, 1}, true},
      {"x^3, x^2*y, x^2*z, x*y^3, x*y^2*z, y^5", std::vector<std::int64_t>{4, 2, 1}, true},
      {"x^3, x^2*y, x^2*z, x*y^3, y^4", std::nullopt, false},
      {"x^3, x^2*y, x*y^2, x^2*z^2, x*y*z^3, x*z^5, y^7", std::nullopt, false},
      {"x^3, x^2*y, x*y^2, x^2*z^2, x*y*z^3, y^6", std::nullopt, false},
      {"x^3, x^2*y, x*y^2, x^2*z^2, y^5", std::nullopt, false},
      {"x^3, x^2*y, x*y^2, y^4", std::nullopt, true},
  };
  auto xyz = RingContext<RationalField>::create(n, RationalField{}, {"x", "y", "z"});
  auto as_ideal = [&](const char* text) {
    std::vector<Monomial> gens;
    for (const auto& p : parse_polynomial_list(xyz, text)) gens.push_back(p.terms().front().mono);
    return MonomialIdeal(n, std::move(gens));
  };

  auto found = enumerate_borel_by_hf(hf, n, bound);
  report.expect("count", 8, found.size());
  std::set<std::vector<std::string>> found_set;
  for (const auto& j : found) found_set.insert(j.to_strings());

  json entries = json::array();
  for (std::size_t i = 0; i < known.size(); ++i) {
    auto j = as_ideal(known[i].gens);
    const std::string label = "ideal_" + std::to_string(i + 1);
    const bool listed = found_set.count(j.to_strings()) > 0;
    report.expect(label + "_enumerated", true, listed);
    auto seg = segment_report(j);
    json entry = {{"label", label}, {"generators", to_json(j)}, {"enumerated", listed}};
    entry["witness"] = seg.data["witness"];
    entry["lex_segment"] = seg.data["lex_segment"];
    entry["revlex_segment"] = seg.data["revlex_segment"];
    report.expect(label + "_feasible", known[i].segment, seg.data["witness"]["feasible"]);
    if (known[i].weight) {
      const bool ok = verify_weight(j, *known[i].weight, 1, j.max_degree() + 1);
      entry["given_weight"] = *known[i].weight;
      entry["given_weight_verifies"] = ok;
      report.expect(label + "_given_weight", true, ok);
    }
    entries.push_back(entry);
  }
  report.data["ideals"] = entries;
  report.expect("ideal_1_lex_segment", true, entries[0]["lex_segment"]);
  report.expect("ideal_8_revlex_segment", true, entries[7]["revlex_segment"]);
  clock.stamp(report, "total");
  return report;
}

#define GINLAB_EXP_INSTANTIATE(F)                                                               \
  template Polynomial<F> random_monic_form(const Ring<F>&, int, SplitMix64&);                  \
  template Polynomial<F> random_form(const Ring<F>&, int, SplitMix64&);                        \
  template ExperimentReport gin_report(const IdealHandle<F>&, const TermOrder&,                 \
                                       const ExperimentOptions&);                               \
  template ExperimentReport pei_report(const IdealHandle<F>&, int, const TermOrder&,            \
                                       const ExperimentOptions&);                               \
  template ExperimentReport sylvester_report(const Polynomial<F>&, const Polynomial<F>&, int,   \
                                             const ExperimentOptions&);                         \
  template ExperimentReport experiment_curve(int, int, const F&, const ExperimentOptions&);     \
  template ExperimentReport point_set_report(const PointSet<F>&, const std::vector<TermOrder>&, \
                                             const ExperimentOptions&);                         \
  template ExperimentReport experiment_points(int, int, const std::vector<TermOrder>&, const F&, \
                                              const ExperimentOptions&);                        \
  template ExperimentReport experiment_nonsmooth(const F&, const ExperimentOptions&);

GINLAB_EXP_INSTANTIATE(PrimeField)
GINLAB_EXP_INSTANTIATE(RationalField)

}  // namespace ginlab
