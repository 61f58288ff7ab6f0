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

#include "esl/tensor/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "esl/error.hpp"
#include "esl/tensor/kernels.hpp"

namespace esl {
namespace {

using EigenRowMatrix =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenRowMatrix> view(const ComplexMatrix& m) {
  return {m.data(), static_cast<Eigen::Index>(m.rows()),
          static_cast<Eigen::Index>(m.cols())};
}

ComplexMatrix from_eigen(const Eigen::MatrixXcd& e) {
  ComplexMatrix out(static_cast<std::size_t>(e.rows()),
                    static_cast<std::size_t>(e.cols()));
  for (Eigen::Index i = 0; i < e.rows(); ++i) {
    for (Eigen::Index j = 0; j < e.cols(); ++j) {
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e(i, j);
    }
  }
  return out;
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw DimensionError(std::string(what) + ": matrix is not square");
  }
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solve_hermitian(
    const ComplexMatrix& m, bool vectors) {
  require_square(m, "hermitian eigensolver");
  const Eigen::MatrixXcd a = view(m);
  const Eigen::MatrixXcd h = 0.5 * (a + a.adjoint());
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(
      h, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  ComplexMatrix out(rows, cols);
  const auto& k = kernels::active_kernels();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t p = 0; p < b.rows(); ++p) {
      cplx* dst = out.data() + (i * b.rows() + p) * cols;
      const cplx* src = b.data() + p * b.cols();
      for (std::size_t j = 0; j < a.cols(); ++j) {
        k.scale(a(i, j), src, dst + j * b.cols(), b.cols());
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, BipartiteDims dims,
                            Subsystem keep) {
  const std::size_t n = dims.total();
  if (!m.is_square() || m.rows() != n) {
    throw DimensionError("partial_trace: operator is " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", dims give " +
                         std::to_string(n));
  }
  const std::size_t db = dims.receiver;
  const std::size_t de = dims.environment;
  if (keep == Subsystem::receiver) {
    ComplexMatrix out(db, db);
    for (std::size_t b = 0; b < db; ++b) {
      for (std::size_t bp = 0; bp < db; ++bp) {
        cplx s = 0.0;
        for (std::size_t e = 0; e < de; ++e) s += m(b * de + e, bp * de + e);
        out(b, bp) = s;
      }
    }
    return out;
  }
  // Tracing the receiver sums the diagonal de x de blocks, which are
  // contiguous row segments.
  ComplexMatrix out(de, de);
  const auto& k = kernels::active_kernels();
  for (std::size_t b = 0; b < db; ++b) {
    for (std::size_t e = 0; e < de; ++e) {
      k.axpy(1.0, m.data() + (b * de + e) * n + b * de, out.data() + e * de, de);
    }
  }
  return out;
}

double hermiticity_defect(const ComplexMatrix& m) {
  require_square(m, "hermiticity_defect");
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() == 0) return {};
  const auto solver = solve_hermitian(m, false);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::pair<std::vector<double>, ComplexMatrix> hermitian_eigensystem(
    const ComplexMatrix& m) {
  if (m.rows() == 0) return {{}, ComplexMatrix()};
  const auto solver = solve_hermitian(m, true);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {std::vector<double>(ev.data(), ev.data() + ev.size()),
          from_eigen(solver.eigenvectors())};
}

bool is_psd(const ComplexMatrix& m, double herm_tol, double eig_tol) {
  require_square(m, "is_psd");
  if (m.rows() == 0) return true;
  if (hermiticity_defect(m) > herm_tol) return false;
  const auto ev = hermitian_eigenvalues(m);
  return ev.front() >= -eig_tol;
}

ComplexMatrix haar_random_unitary(std::size_t d, std::uint64_t seed) {
  if (d == 0) throw DomainError("haar_random_unitary: d must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0 / std::sqrt(2.0));
  Eigen::MatrixXcd z(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    for (Eigen::Index j = 0; j < z.cols(); ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(i, j) = cplx(re, im);
    }
  }
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const cplx rjj = r(j, j);
    const double mag = std::abs(rjj);
    const cplx phase = mag > 0.0 ? rjj / mag : cplx(1.0, 0.0);
    q.col(j) *= phase;
  }
  return from_eigen(q);
}

double unitarity_defect(const ComplexMatrix& u) {
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.cols()));
}

ComplexMatrix inverse_sqrt_psd(const ComplexMatrix& m, double floor) {
  auto [ev, vecs] = hermitian_eigensystem(m);
  if (ev.empty()) return ComplexMatrix();
  if (!(ev.front() > floor)) {
    throw DomainError("inverse_sqrt_psd: matrix is not positive definite");
  }
  const std::size_t n = ev.size();
  ComplexMatrix scaled = vecs;
  for (std::size_t j = 0; j < n; ++j) {
    const double s = 1.0 / std::sqrt(ev[j]);
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= s;
  }
  return scaled * vecs.adjoint();
}

}  // namespace esl
