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

#include "esl/psd/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "esl/error.hpp"

namespace esl {
namespace {

void check_shapes(const PsdFactorization& f) {
  auto ok = [&](const ComplexMatrix& x) {
    return x.rows() == f.size && x.cols() == f.size;
  };
  if (!std::all_of(f.row_factors.begin(), f.row_factors.end(), ok) ||
      !std::all_of(f.col_factors.begin(), f.col_factors.end(), ok)) {
    throw DimensionError("PsdFactorization: every factor must be " +
                         std::to_string(f.size) + "x" + std::to_string(f.size));
  }
}

// Groups identical lines; returns class per line and one representative per
// class, in order of first appearance.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> line_classes(
    const ChannelMatrix& m) {
  std::map<std::vector<double>, std::size_t> seen;
  std::vector<std::size_t> cls(m.rows());
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<double> key(m.row(i).begin(), m.row(i).end());
    auto [it, fresh] = seen.emplace(std::move(key), reps.size());
    if (fresh) reps.push_back(i);
    cls[i] = it->second;
  }
  return {std::move(cls), std::move(reps)};
}

ComplexMatrix basis_projector(std::size_t r, std::size_t c) {
  ComplexMatrix p(r, r);
  p(c, c) = 1.0;
  return p;
}

}  // namespace

ChannelMatrix realized_matrix(const PsdFactorization& f) {
  check_shapes(f);
  ChannelMatrix out(f.row_factors.size(), f.col_factors.size());
  for (std::size_t i = 0; i < f.row_factors.size(); ++i) {
    for (std::size_t j = 0; j < f.col_factors.size(); ++j) {
      out(i, j) = born_probability(f.row_factors[i], f.col_factors[j]);
    }
  }
  return out;
}

double min_factor_eigenvalue(const PsdFactorization& f) {
  double lo = std::numeric_limits<double>::infinity();
  for (const auto* family : {&f.row_factors, &f.col_factors}) {
    for (const ComplexMatrix& x : *family) {
      if (x.rows() == 0) continue;
      lo = std::min(lo, hermitian_eigenvalues(x).front());
    }
  }
  return lo;
}

double validate_factorization(const ChannelMatrix& m, const PsdFactorization& f,
                              double psd_tol) {
  check_shapes(f);
  if (f.row_factors.size() != m.rows() || f.col_factors.size() != m.cols()) {
    throw DimensionError("validate_factorization: factorization realizes a " +
                         std::to_string(f.row_factors.size()) + "x" +
                         std::to_string(f.col_factors.size()) +
                         " matrix, target is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
  for (std::size_t i = 0; i < f.row_factors.size(); ++i) {
    if (!is_psd(f.row_factors[i], psd_tol, psd_tol)) {
      throw DomainError("validate_factorization: row factor " + std::to_string(i) +
                        " is not PSD");
    }
  }
  for (std::size_t j = 0; j < f.col_factors.size(); ++j) {
    if (!is_psd(f.col_factors[j], psd_tol, psd_tol)) {
      throw DomainError("validate_factorization: column factor " +
                        std::to_string(j) + " is not PSD");
    }
  }
  return max_abs_diff(realized_matrix(f), m);
}

PsdFactorization factorization_from_strategy(std::span<const DensityMatrix> encodings,
                                             const Povm& povm,
                                             const ChannelMatrix& relabel) {
  const std::size_t r = povm.dim();
  if (relabel.rows() != povm.outcomes()) {
    throw DimensionError("factorization_from_strategy: relabeling has " +
                         std::to_string(relabel.rows()) + " rows for " +
                         std::to_string(povm.outcomes()) + " outcomes");
  }
  require_row_stochastic(relabel, "factorization_from_strategy relabeling");
  PsdFactorization f;
  f.size = r;
  for (const DensityMatrix& rho : encodings) {
    if (rho.dim() != r) {
      throw DimensionError("factorization_from_strategy: encoding dim " +
                           std::to_string(rho.dim()) + " vs POVM dim " +
                           std::to_string(r));
    }
    f.row_factors.push_back(rho.matrix());
  }
  for (std::size_t j = 0; j < relabel.cols(); ++j) {
    ComplexMatrix c(r, r);
    for (std::size_t k = 0; k < povm.outcomes(); ++k) {
      if (relabel(k, j) != 0.0) c += relabel(k, j) * povm.effect(k);
    }
    f.col_factors.push_back(std::move(c));
  }
  return f;
}

PsdFactorization factorization_from_strategy(const LoneStrategy& s) {
  return factorization_from_strategy(s.encodings, s.povm, s.relabel);
}

PsdFactorization factorization_from_channel(const Isometry& v,
                                            std::span<const DensityMatrix> encodings,
                                            const Povm& receiver_povm) {
  if (receiver_povm.dim() != v.receiver_dim()) {
    throw DimensionError("factorization_from_channel: POVM dim does not match receiver");
  }
  PsdFactorization f;
  f.size = v.receiver_dim();
  for (const DensityMatrix& rho : encodings) {
    f.row_factors.push_back(channel_apply(v, rho).matrix());
  }
  for (const ComplexMatrix& e : receiver_povm.effects()) f.col_factors.push_back(e);
  return f;
}

PsdFactorization classical_witness(const ChannelMatrix& m) {
  require_nonnegative(m, "classical_witness");
  const auto [row_cls, row_reps] = line_classes(m);
  const ChannelMatrix mt = m.transpose();
  const auto [col_cls, col_reps] = line_classes(mt);

  PsdFactorization f;
  if (row_reps.size() <= col_reps.size()) {
    const std::size_t r = row_reps.size();
    f.size = r;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      f.row_factors.push_back(basis_projector(r, row_cls[i]));
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      ComplexMatrix c(r, r);
      for (std::size_t k = 0; k < r; ++k) c(k, k) = std::max(m(row_reps[k], j), 0.0);
      f.col_factors.push_back(std::move(c));
    }
  } else {
    const std::size_t r = col_reps.size();
    f.size = r;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      ComplexMatrix c(r, r);
      for (std::size_t k = 0; k < r; ++k) c(k, k) = std::max(m(i, col_reps[k]), 0.0);
      f.row_factors.push_back(std::move(c));
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      f.col_factors.push_back(basis_projector(r, col_cls[j]));
    }
  }
  return f;
}

}  // namespace esl
