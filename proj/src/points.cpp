#include "ginlab/points.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>
#include <cctype>

#include "ginlab/errors.hpp"

namespace ginlab {

namespace {

template <class F>
bool proportional(const F& k, const std::vector<typename F::Element>& a,
                  const std::vector<typename F::Element>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (!k.equal(k.mul(a[i], b[j]), k.mul(a[j], b[i]))) return false;
    }
  }
  return true;
}

template <class F>
void validate(const PointSet<F>& ps) {
  const F& k = ps.field;
  for (std::size_t i = 0; i < ps.points.size(); ++i) {
    const auto& p = ps.points[i];
    if (static_cast<int>(p.size()) != ps.nvars) throw std::invalid_argument("point has wrong length");
    if (std::all_of(p.begin(), p.end(), [&](const auto& x) { return k.is_zero(x); })) {
      throw std::invalid_argument("the zero tuple is not a point");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (proportional(k, p, ps.points[j])) {
        throw std::invalid_argument("points " + std::to_string(j) + " and " + std::to_string(i) +
                                    " coincide");
      }
    }
  }
}

template <class F>
typename F::Element evaluate(const F& k, const Monomial& m, const std::vector<typename F::Element>& p) {
  auto v = k.one();
  for (int i = 0; i < m.nvars(); ++i) {
    for (int e = 0; e < m[i]; ++e) v = k.mul(v, p[i]);
  }
  return v;
}

}  // namespace

template <class F>
PointSet<F> random_points(int s, int r, std::uint64_t seed, const F& field) {
  if (s < 1 || r < 1) throw std::invalid_argument("need s >= 1 and r >= 1");
  PointSet<F> ps{field, r + 1, {}, seed};
  SplitMix64 rng(seed);
  while (static_cast<int>(ps.points.size()) < s) {
    std::vector<typename F::Element> p(r + 1);
    for (int i = 0; i < r; ++i) p[i] = field.random(rng);
    p[r] = field.one();
    bool repeated = std::any_of(ps.points.begin(), ps.points.end(),
                                [&](const auto& q) { return proportional(field, p, q); });
    if (!repeated) ps.points.push_back(std::move(p));
  }
  return ps;
}

template <class F>
PointSet<F> make_points(const F& field, const std::vector<std::vector<std::int64_t>>& coords) {
  if (coords.empty()) throw std::invalid_argument("empty point set");
  PointSet<F> ps{field, static_cast<int>(coords.front().size()), {}, std::nullopt};
  if (ps.nvars < 2 || ps.nvars > kMaxVars) throw std::invalid_argument("bad point dimension");
  for (const auto& c : coords) {
    std::vector<typename F::Element> p;
    for (auto x : c) p.push_back(field.from_int(x));
    ps.points.push_back(std::move(p));
  }
  validate(ps);
  return ps;
}

template <class F>
PointSet<F> parse_point_file(const F& field, std::string_view text) {
  std::vector<std::vector<std::int64_t>> coords;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) {
      continue;
    }
    std::vector<std::int64_t> point;
    std::istringstream fields(line);
    std::string item;
    while (std::getline(fields, item, ',')) {
      try {
        std::size_t used = 0;
        point.push_back(std::stoll(item, &used));
        if (item.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad coordinate '" + item + "' in point file");
      }
    }
    if (!coords.empty() && point.size() != coords.front().size()) {
      throw std::invalid_argument("points of different lengths in point file");
    }
    coords.push_back(std::move(point));
  }
  return make_points(field, coords);
}

std::vector<std::vector<std::int64_t>> seven_special_points() {
  return {{0, 0, 0, 1}, {0, 0, 1, 1}, {0, 0, 2, 1}, {0, 1, 0, 1},
          {0, 1, 1, 1}, {0, 2, 0, 1}, {1, 0, 0, 1}};
}

std::vector<std::vector<std::int64_t>> ten_lattice_points() {
  std::vector<std::vector<std::int64_t>> out;
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; a + b <= 2; ++b) {
      for (int c = 0; a + b + c <= 2; ++c) out.push_back({a, b, c, 1});
    }
  }
  return out;
}

template <class F>
DenseMatrix<F> evaluation_matrix(const PointSet<F>& points, int d) {
  auto monos = monomials_of_degree(points.nvars, d);
  DenseMatrix<F> x(points.field, points.size(), monos.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < monos.size(); ++j) x(i, j) = evaluate(points.field, monos[j], points.points[i]);
  }
  return x;
}

template <class F>
IdealHandle<F> vanishing_ideal(const PointSet<F>& points, int degree_bound, int threads) {
  const int s = static_cast<int>(points.size());
  const int n = points.nvars;
  const F& k = points.field;
  if (degree_bound < 0) degree_bound = s;
  if (degree_bound < s) throw std::invalid_argument("degree bound must be at least the number of points");
  auto ring = RingContext<F>::create(n, k);

  // I_d = ker X_d, degree by degree (independent, so spread over threads)
  std::vector<std::vector<std::vector<typename F::Element>>> kernels(degree_bound + 1);
  std::vector<std::size_t> ranks(degree_bound + 1, 0);
#pragma omp parallel for num_threads(std::max(threads, 1)) schedule(dynamic) if (threads > 1)
  for (int d = 1; d <= degree_bound; ++d) {
    auto x = evaluation_matrix(points, d);
    kernels[d] = nullspace(x);
    ranks[d] = x.cols() - kernels[d].size();
  }
  if (static_cast<int>(ranks[s]) != s) {
    throw DomainError("evaluation matrix in degree " + std::to_string(s) + " has rank " +
                      std::to_string(ranks[s]) + ", expected " + std::to_string(s));
  }

  std::vector<Polynomial<F>> gens;
  std::vector<Polynomial<F>> previous;  // basis of I_{d-1}
  for (int d = 1; d <= degree_bound; ++d) {
    auto monos = monomials_of_degree(n, d);
    std::unordered_map<Monomial, std::size_t> col;
    for (std::size_t j = 0; j < monos.size(); ++j) col[monos[j]] = j;
    EchelonBasis<F> span(k, monos.size());
    for (const auto& h : previous) {
      for (int v = 0; v < n; ++v) {
        std::vector<typename F::Element> row(monos.size(), k.zero());
        Monomial xv = Monomial::variable(n, v);
        for (const auto& t : h.terms()) row[col.at(t.mono * xv)] = t.coeff;
        span.insert(std::move(row));
      }
    }
    std::vector<Polynomial<F>> current;
    for (const auto& vec : kernels[d]) {
      std::vector<Term<F>> terms;
      for (std::size_t j = 0; j < monos.size(); ++j) {
        if (!k.is_zero(vec[j])) terms.push_back({monos[j], vec[j]});
      }
      auto f = Polynomial<F>::from_terms(ring, std::move(terms));
      if (span.insert(vec)) gens.push_back(f);
      current.push_back(std::move(f));
    }
    previous = std::move(current);
  }
  return IdealHandle<F>(ring, std::move(gens));
}

template <class F>
GenericityReport genericity_spot_check(const PointSet<F>& points, int d_max, int samples,
                                       std::uint64_t seed) {
  GenericityReport report;
  const std::size_t s = points.size();
  SplitMix64 rng(seed);
  for (int d = 1; d <= d_max; ++d) {
    auto x = evaluation_matrix(points, d);
    GenericityReport::Degree entry{d, x.cols(), x.cols() < s, 0, 0};
    if (!entry.skipped) {
      auto test = [&](const std::vector<std::size_t>& cols) {
        DenseMatrix<F> sub(points.field, s, s);
        for (std::size_t i = 0; i < s; ++i) {
          for (std::size_t j = 0; j < s; ++j) sub(i, j) = x(i, cols[j]);
        }
        ++entry.samples;
        if (points.field.is_zero(determinant(std::move(sub)))) ++entry.failures;
      };
      const std::int64_t all = binomial(static_cast<std::int64_t>(x.cols()), static_cast<std::int64_t>(s));
      if (all <= samples) {
        std::vector<int> pick(x.cols(), 0);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(s), 1);
        do {
          std::vector<std::size_t> cols;
          for (std::size_t c = 0; c < pick.size(); ++c) {
            if (pick[c]) cols.push_back(c);
          }
          test(cols);
        } while (std::prev_permutation(pick.begin(), pick.end()));
      } else {
        std::vector<std::size_t> perm(x.cols());
        for (int t = 0; t < samples; ++t) {
          std::iota(perm.begin(), perm.end(), 0);
          for (std::size_t i = 0; i < s; ++i) {
            std::size_t j = i + rng.below(perm.size() - i);
            std::swap(perm[i], perm[j]);
          }
          std::vector<std::size_t> cols(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(s));
          std::sort(cols.begin(), cols.end());
          test(cols);
        }
      }
    }
    report.degrees.push_back(entry);
  }
  return report;
}

#define GINLAB_POINTS_INSTANTIATE(F)                                                            \
  template struct PointSet<F>;                                                                 \
  template PointSet<F> random_points(int, int, std::uint64_t, const F&);                       \
  template PointSet<F> make_points(const F&, const std::vector<std::vector<std::int64_t>>&);   \
  template PointSet<F> parse_point_file(const F&, std::string_view);                           \
  template DenseMatrix<F> evaluation_matrix(const PointSet<F>&, int);                          \
  template IdealHandle<F> vanishing_ideal(const PointSet<F>&, int, int);                       \
  template GenericityReport genericity_spot_check(const PointSet<F>&, int, int, std::uint64_t);

GINLAB_POINTS_INSTANTIATE(PrimeField)
GINLAB_POINTS_INSTANTIATE(RationalField)

}  // namespace ginlab
