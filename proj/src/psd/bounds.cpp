// Copyright 2026 The ESL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "esl/psd/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "esl/error.hpp"

namespace esl {
namespace {

using Lines = std::vector<std::size_t>;

class Engine {
 public:
  Engine(const ChannelMatrix& m, const LowerBoundOptions& opts)
      : m_(m), opts_(opts) {}

  BoundNode solve(const Lines& rows_in, const Lines& cols_in) {
    Lines rows;
    for (std::size_t i : rows_in) {
      if (std::any_of(cols_in.begin(), cols_in.end(),
                      [&](std::size_t j) { return nz(i, j); })) {
        rows.push_back(i);
      }
    }
    Lines cols;
    for (std::size_t j : cols_in) {
      if (std::any_of(rows.begin(), rows.end(),
                      [&](std::size_t i) { return nz(i, j); })) {
        cols.push_back(j);
      }
    }
    if (rows.empty()) return leaf("zero", 0, rows, cols);

    auto key = std::make_pair(rows, cols);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    BoundNode best = compute(rows, cols);
    memo_.emplace(std::move(key), best);
    return best;
  }

 private:
  bool nz(std::size_t i, std::size_t j) const { return m_(i, j) > opts_.zero_tol; }

  static BoundNode leaf(const char* method, int bound, const Lines& rows,
                        const Lines& cols) {
    BoundNode n;
    n.method = method;
    n.bound = bound;
    n.rows = rows;
    n.cols = cols;
    return n;
  }

  static Lines minus(const Lines& all, const Lines& part) {
    Lines out;
    std::set_difference(all.begin(), all.end(), part.begin(), part.end(),
                        std::back_inserter(out));
    return out;
  }

  BoundNode split(const char* method, const Lines& rows, const Lines& cols,
                  const Lines& r1, const Lines& c1, const Lines& r2,
                  const Lines& c2) {
    BoundNode n = leaf(method, 0, rows, cols);
    n.children.push_back(solve(r1, c1));
    n.children.push_back(solve(r2, c2));
    n.bound = n.children[0].bound + n.children[1].bound;
    return n;
  }

  // Connected components of the bipartite support graph.
  std::vector<std::pair<Lines, Lines>> components(const Lines& rows,
                                                  const Lines& cols) const {
    std::vector<int> row_comp(rows.size(), -1);
    std::vector<int> col_comp(cols.size(), -1);
    int count = 0;
    for (std::size_t start = 0; start < rows.size(); ++start) {
      if (row_comp[start] >= 0) continue;
      std::vector<std::size_t> stack{start};
      row_comp[start] = count;
      while (!stack.empty()) {
        const std::size_t r = stack.back();
        stack.pop_back();
        for (std::size_t c = 0; c < cols.size(); ++c) {
          if (col_comp[c] >= 0 || !nz(rows[r], cols[c])) continue;
          col_comp[c] = count;
          for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
            if (row_comp[r2] < 0 && nz(rows[r2], cols[c])) {
              row_comp[r2] = count;
              stack.push_back(r2);
            }
          }
        }
      }
      ++count;
    }
    std::vector<std::pair<Lines, Lines>> out(static_cast<std::size_t>(count));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      out[static_cast<std::size_t>(row_comp[r])].first.push_back(rows[r]);
    }
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out[static_cast<std::size_t>(col_comp[c])].second.push_back(cols[c]);
    }
    return out;
  }

  // Column-maxima sum after normalizing each row to sum 1.
  double monotone(const Lines& rows, const Lines& cols) const {
    std::vector<double> best(cols.size(), 0.0);
    for (std::size_t i : rows) {
      double s = 0.0;
      for (std::size_t j : cols) s += std::max(m_(i, j), 0.0);
      for (std::size_t c = 0; c < cols.size(); ++c) {
        best[c] = std::max(best[c], std::max(m_(i, cols[c]), 0.0) / s);
      }
    }
    double total = 0.0;
    for (double b : best) total += b;
    return total;
  }

  // Same on the transpose: row-maxima sum after normalizing columns.
  double monotone_transpose(const Lines& rows, const Lines& cols) const {
    std::vector<double> best(rows.size(), 0.0);
    for (std::size_t j : cols) {
      double s = 0.0;
      for (std::size_t i : rows) s += std::max(m_(i, j), 0.0);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        best[r] = std::max(best[r], std::max(m_(rows[r], j), 0.0) / s);
      }
    }
    double total = 0.0;
    for (double b : best) total += b;
    return total;
  }

  bool triangular(const Lines& rows, const Lines& cols) const {
    if (rows.size() != cols.size()) return false;
    const std::size_t n = rows.size();
    for (std::size_t k = 0; k < n; ++k) {
      if (!(m_(rows[k], cols[k]) > std::max(1e-12, opts_.zero_tol))) return false;
    }
    bool lower = true;
    bool upper = true;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c > r && nz(rows[r], cols[c])) lower = false;
        if (c < r && nz(rows[r], cols[c])) upper = false;
      }
    }
    return lower || upper;
  }

  bool zero_block(const Lines& rows, const Lines& cols) const {
    for (std::size_t i : rows) {
      for (std::size_t j : cols) {
        if (nz(i, j)) return false;
      }
    }
    return true;
  }

  BoundNode compute(const Lines& rows, const Lines& cols) {
    if (rows.size() == 1 || cols.size() == 1) return leaf("rank-one", 1, rows, cols);

    const auto comps = components(rows, cols);
    if (comps.size() > 1) {
      BoundNode n = leaf("direct-sum", 0, rows, cols);
      for (const auto& [r, c] : comps) {
        n.children.push_back(solve(r, c));
        n.bound += n.children.back().bound;
      }
      return n;
    }

    // No bound can exceed min(rows, cols): a diagonal factorization of that
    // size always exists.
    const int cap = static_cast<int>(std::min(rows.size(), cols.size()));
    BoundNode best = leaf("nonzero", 1, rows, cols);
    auto consider = [&](BoundNode cand) {
      if (cand.bound > best.bound) best = std::move(cand);
      return best.bound >= cap;
    };

    {
      BoundNode n = leaf("monotone", 0, rows, cols);
      n.value = monotone(rows, cols);
      n.bound = monotone_to_bound(*n.value);
      if (consider(std::move(n))) return best;
    }
    {
      BoundNode n = leaf("monotone-transpose", 0, rows, cols);
      n.value = monotone_transpose(rows, cols);
      n.bound = monotone_to_bound(*n.value);
      if (consider(std::move(n))) return best;
    }
    if (triangular(rows, cols)) {
      if (consider(leaf("triangular", cap, rows, cols))) return best;
    }

    // Contiguous splits in the given order, zero block top-right or
    // bottom-left.
    for (std::size_t a = 1; a < rows.size(); ++a) {
      const Lines top(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(a));
      const Lines bottom(rows.begin() + static_cast<std::ptrdiff_t>(a), rows.end());
      for (std::size_t b = 1; b < cols.size(); ++b) {
        const Lines left(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(b));
        const Lines right(cols.begin() + static_cast<std::ptrdiff_t>(b), cols.end());
        if (zero_block(top, right) || zero_block(bottom, left)) {
          if (consider(split("block-triangular", rows, cols, top, left, bottom, right))) {
            return best;
          }
        }
      }
    }

    // Zero blocks hidden by the ordering: every maximal zero rectangle S x T
    // is reached by enumerating one side.
    const std::size_t limit = opts_.subset_search_limit;
    if (rows.size() <= limit && rows.size() <= cols.size()) {
      const std::size_t n = rows.size();
      for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
        Lines s;
        for (std::size_t r = 0; r < n; ++r) {
          if (mask & (std::size_t{1} << r)) s.push_back(rows[r]);
        }
        Lines t_zero;
        for (std::size_t j : cols) {
          if (std::none_of(s.begin(), s.end(), [&](std::size_t i) { return nz(i, j); })) {
            t_zero.push_back(j);
          }
        }
        if (t_zero.empty()) continue;
        if (consider(split("block-triangular", rows, cols, s, minus(cols, t_zero),
                           minus(rows, s), t_zero))) {
          return best;
        }
      }
    } else if (cols.size() <= limit) {
      const std::size_t n = cols.size();
      for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
        Lines t;
        for (std::size_t c = 0; c < n; ++c) {
          if (mask & (std::size_t{1} << c)) t.push_back(cols[c]);
        }
        Lines s_zero;
        for (std::size_t i : rows) {
          if (std::none_of(t.begin(), t.end(), [&](std::size_t j) { return nz(i, j); })) {
            s_zero.push_back(i);
          }
        }
        if (s_zero.empty()) continue;
        if (consider(split("block-triangular", rows, cols, s_zero, minus(cols, t),
                           minus(rows, s_zero), t))) {
          return best;
        }
      }
    }
    return best;
  }

  const ChannelMatrix& m_;
  LowerBoundOptions opts_;
  std::map<std::pair<Lines, Lines>, BoundNode> memo_;
};

Lines iota_lines(std::size_t n) {
  Lines v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = k;
  return v;
}

void mark_transposed(BoundNode& n) {
  n.transposed = true;
  for (BoundNode& c : n.children) mark_transposed(c);
}

}  // namespace

double column_maxima_sum(const ChannelMatrix& m) {
  double total = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) best = std::max(best, m(i, j));
    total += best;
  }
  return total;
}

double max_monotone(const ChannelMatrix& m) {
  require_row_stochastic(m, "max_monotone");
  return column_maxima_sum(m);
}

int monotone_to_bound(double x) { return static_cast<int>(std::ceil(x - 1e-9)); }

LowerBound lower_bound(const ChannelMatrix& m, const LowerBoundOptions& opts) {
  require_nonnegative(m, "lower_bound");
  Engine direct(m, opts);
  BoundNode a = direct.solve(iota_lines(m.rows()), iota_lines(m.cols()));

  const ChannelMatrix mt = m.transpose();
  Engine flipped(mt, opts);
  BoundNode b = flipped.solve(iota_lines(mt.rows()), iota_lines(mt.cols()));

  if (b.bound > a.bound) {
    mark_transposed(b);
    BoundNode root;
    root.method = "transpose";
    root.bound = b.bound;
    root.rows = iota_lines(m.rows());
    root.cols = iota_lines(m.cols());
    root.children.push_back(std::move(b));
    return {root.bound, std::move(root)};
  }
  return {a.bound, std::move(a)};
}

}  // namespace esl
