#include "ginlab/term_order.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ginlab {

TermOrder TermOrder::lex() { return TermOrder{}; }

TermOrder TermOrder::revlex() {
  TermOrder t;
  t.kind_ = Kind::Revlex;
  return t;
}

TermOrder TermOrder::weight(std::vector<std::int64_t> weights, TermOrder tiebreak) {
  if (weights.empty()) throw std::invalid_argument("weight order needs a weight vector");
  for (auto w : weights) {
    if (w <= 0) throw std::invalid_argument("weight order requires strictly positive weights");
  }
  TermOrder t;
  t.kind_ = Kind::Weight;
  t.weights_ = std::move(weights);
  t.children_.push_back(std::move(tiebreak));
  return t;
}

TermOrder TermOrder::product(std::vector<int> block_sizes, std::vector<TermOrder> inner) {
  if (block_sizes.empty() || block_sizes.size() != inner.size()) {
    throw std::invalid_argument("product order needs one inner order per block");
  }
  for (int b : block_sizes) {
    if (b <= 0) throw std::invalid_argument("product order blocks must be nonempty");
  }
  TermOrder t;
  t.kind_ = Kind::Product;
  t.blocks_ = std::move(block_sizes);
  t.children_ = std::move(inner);
  return t;
}

TermOrder TermOrder::elimination(int nvars, TermOrder inner) {
  if (nvars < 2) throw std::invalid_argument("elimination order needs at least two variables");
  return product({1, nvars - 1}, {lex(), std::move(inner)});
}

TermOrder TermOrder::parse(std::string_view text, int nvars) {
  if (text == "lex") return lex();
  if (text == "revlex") return revlex();
  if (text == "elim") return elimination(nvars, revlex());
  if (text.starts_with("weight:")) {
    std::vector<std::int64_t> w;
    std::string body(text.substr(7));
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument("bad weight entry '" + item + "'");
      w.push_back(v);
    }
    if (static_cast<int>(w.size()) != nvars) {
      throw std::invalid_argument("weight vector length does not match variable count");
    }
    return weight(std::move(w), revlex());
  }
  throw std::invalid_argument("unknown term order '" + std::string(text) + "'");
}

namespace {

// Keeps rows that are linearly independent of the rows before them (exact, over Q).
std::vector<std::vector<std::int64_t>> independent_rows(
    const std::vector<std::vector<std::int64_t>>& rows, int nvars) {
  std::vector<std::vector<std::int64_t>> kept;
  std::vector<std::vector<mpq_class>> echelon;
  std::vector<int> pivots;
  for (const auto& row : rows) {
    std::vector<mpq_class> v(row.begin(), row.end());
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      if (v[pivots[k]] == 0) continue;
      mpq_class f = v[pivots[k]] / echelon[k][pivots[k]];
      for (int j = 0; j < nvars; ++j) v[j] -= f * echelon[k][j];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const mpq_class& x) { return x != 0; });
    if (it == v.end()) continue;
    pivots.push_back(static_cast<int>(it - v.begin()));
    echelon.push_back(std::move(v));
    kept.push_back(row);
  }
  return kept;
}

}  // namespace

std::vector<std::vector<std::int64_t>> TermOrder::matrix(int nvars) const {
  if (nvars < 1) throw std::invalid_argument("term order needs at least one variable");
  std::vector<std::vector<std::int64_t>> rows;
  rows.emplace_back(nvars, 1);
  switch (kind_) {
    case Kind::Lex:
      for (int i = 0; i + 1 < nvars; ++i) {
        std::vector<std::int64_t> r(nvars, 0);
        r[i] = 1;
        rows.push_back(std::move(r));
      }
      break;
    case Kind::Revlex:
      // deg - e_{n-1}, deg - e_{n-1} - e_{n-2}, ...: the smaller trailing exponent wins.
      for (int k = nvars - 1; k >= 1; --k) {
        std::vector<std::int64_t> r(nvars, 0);
        for (int i = 0; i < k; ++i) r[i] = 1;
        rows.push_back(std::move(r));
      }
      break;
    case Kind::Weight: {
      if (static_cast<int>(weights_.size()) != nvars) {
        throw std::invalid_argument("weight vector length does not match variable count");
      }
      rows.push_back(weights_);
      auto tail = children_.front().matrix(nvars);
      rows.insert(rows.end(), tail.begin(), tail.end());
      break;
    }
    case Kind::Product: {
      if (std::accumulate(blocks_.begin(), blocks_.end(), 0) != nvars) {
        throw std::invalid_argument("product order block sizes do not sum to variable count");
      }
      int offset = 0;
      for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (const auto& inner : children_[b].matrix(blocks_[b])) {
          std::vector<std::int64_t> r(nvars, 0);
          std::copy(inner.begin(), inner.end(), r.begin() + offset);
          rows.push_back(std::move(r));
        }
        offset += blocks_[b];
      }
      break;
    }
  }
  auto kept = independent_rows(rows, nvars);
  if (static_cast<int>(kept.size()) != nvars) {
    throw std::logic_error("term order matrix is not of full rank");
  }
  return kept;
}

std::string TermOrder::to_string() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::Revlex:
      return "revlex";
    case Kind::Weight: {
      std::string s = "weight:";
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(weights_[i]);
      }
      if (children_.front().kind() != Kind::Revlex) s += "/" + children_.front().to_string();
      return s;
    }
    case Kind::Product: {
      std::string s = "product(";
      for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) s += ',';
        s += std::to_string(blocks_[b]) + ":" + children_[b].to_string();
      }
      return s + ")";
    }
  }
  return "?";
}

CompiledOrder::CompiledOrder(const TermOrder& order, int nvars)
    : order_(order), nvars_(nvars), rows_(order.matrix(nvars)), columns_(nvars, 0) {
  const int bits = 128 / nvars;
  const int nrows = static_cast<int>(rows_.size());
  for (int k = 0; k < nrows; ++k) {
    std::int64_t max_entry = *std::max_element(rows_[k].begin(), rows_[k].end());
    // A row value is at most kMaxDegree * max_entry; it must fit in its bit field.
    unsigned __int128 limit = bits >= 127 ? ~static_cast<unsigned __int128>(0)
                                          : (static_cast<unsigned __int128>(1) << bits);
    if (static_cast<unsigned __int128>(max_entry) * kMaxDegree >= limit) {
      throw std::invalid_argument("term order weights too large for " + std::to_string(nvars) +
                                  " variables");
    }
    int shift = bits * (nrows - 1 - k);
    for (int i = 0; i < nvars; ++i) {
      columns_[i] += static_cast<Key>(rows_[k][i]) << shift;
    }
  }
}

std::strong_ordering CompiledOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != nvars_ || b.nvars() != nvars_) {
    throw std::invalid_argument("monomial does not belong to the order's ring");
  }
  return key(a) <=> key(b);
}

std::strong_ordering cmp_monomials(const Monomial& m, const Monomial& n, const TermOrder& order) {
  if (m.nvars() != n.nvars()) throw std::invalid_argument("monomials from different rings");
  return CompiledOrder(order, m.nvars()).compare(m, n);
}

}  // namespace ginlab
