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

#include "esl/psd/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "esl/channel/sampling.hpp"
#include "esl/error.hpp"

namespace esl {
namespace {

using Mat = Eigen::MatrixXcd;

struct Restart {
  std::vector<Mat> a;  // R_i = a_i^dagger a_i
  std::vector<Mat> b;  // C_j = b_j^dagger b_j
  double residual = std::numeric_limits<double>::infinity();
};

class Problem {
 public:
  Problem(const ChannelMatrix& m, std::size_t r, const SolverOptions& opts)
      : n_(m.rows()), k_(m.cols()), r_(r), opts_(opts), target_(n_ * k_) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) target_(idx(i, j)) = m(i, j);
    }
    norm_ = target_.norm();
    if (norm_ == 0.0) norm_ = 1.0;
  }

  Restart run(std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    Restart st;
    // Scale so that E Tr(R C) = r^3 sigma^4 matches the mean target entry.
    const double mean = target_.sum() / static_cast<double>(target_.size());
    const double rr = static_cast<double>(r_);
    const double sigma = std::pow(std::max(mean, 1e-3) / (rr * rr * rr), 0.25);
    std::normal_distribution<double> gauss(0.0, sigma / std::sqrt(2.0));
    auto draw = [&] {
      Mat x(static_cast<Eigen::Index>(r_), static_cast<Eigen::Index>(r_));
      for (Eigen::Index p = 0; p < x.size(); ++p) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        x.data()[p] = {re, im};
      }
      return x;
    };
    for (std::size_t i = 0; i < n_; ++i) st.a.push_back(draw());
    for (std::size_t j = 0; j < k_; ++j) st.b.push_back(draw());

    Eigen::VectorXd f = residuals(st.a, st.b);
    double cost = f.squaredNorm();
    double lambda = -1.0;
    double checkpoint = cost;
    const double stop = std::pow(opts_.converge_tol * norm_, 2);

    for (std::size_t it = 0; it < opts_.max_iters && cost > stop; ++it) {
      const auto rows = gram(st.a);
      const auto cols = gram(st.b);
      std::vector<Mat> g(n_ * k_), h(n_ * k_);
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < k_; ++j) {
          g[idx(i, j)] = st.a[i] * cols[j];
          h[idx(i, j)] = st.b[j] * rows[i];
        }
      }
      const Eigen::MatrixXd kmat = normal_matrix(g, h);
      if (lambda < 0.0) lambda = 1e-3 * std::max(kmat.diagonal().maxCoeff(), 1e-12);

      bool accepted = false;
      for (int attempt = 0; attempt < 30 && !accepted; ++attempt) {
        Eigen::MatrixXd damped = kmat;
        damped.diagonal().array() += lambda;
        const Eigen::VectorXd y = damped.ldlt().solve(f);
        std::vector<Mat> a2 = st.a;
        std::vector<Mat> b2 = st.b;
        for (std::size_t i = 0; i < n_; ++i) {
          for (std::size_t j = 0; j < k_; ++j) {
            const double w = 2.0 * y(idx(i, j));
            a2[i] -= w * g[idx(i, j)];
            b2[j] -= w * h[idx(i, j)];
          }
        }
        Eigen::VectorXd f2 = residuals(a2, b2);
        const double cost2 = f2.squaredNorm();
        if (cost2 < cost) {
          st.a = std::move(a2);
          st.b = std::move(b2);
          f = std::move(f2);
          cost = cost2;
          lambda = std::max(lambda / 3.0, 1e-15);
          accepted = true;
        } else {
          lambda *= 4.0;
        }
      }
      if (!accepted) break;
      // Stalled restarts (the rank is too small, or a poor basin) stop early.
      if ((it + 1) % 200 == 0) {
        if (cost > 0.99 * checkpoint) break;
        checkpoint = cost;
      }
    }
    st.residual = std::sqrt(cost) / norm_;
    return st;
  }

  PsdFactorization to_factorization(const Restart& st) const {
    PsdFactorization out;
    out.size = r_;
    for (const Mat& x : gram(st.a)) out.row_factors.push_back(convert(x));
    for (const Mat& x : gram(st.b)) out.col_factors.push_back(convert(x));
    return out;
  }

 private:
  std::size_t idx(std::size_t i, std::size_t j) const { return i * k_ + j; }

  static std::vector<Mat> gram(const std::vector<Mat>& xs) {
    std::vector<Mat> out;
    out.reserve(xs.size());
    for (const Mat& x : xs) out.push_back(x.adjoint() * x);
    return out;
  }

  static ComplexMatrix convert(const Mat& x) {
    const Mat h = 0.5 * (x + x.adjoint());
    ComplexMatrix out(static_cast<std::size_t>(h.rows()),
                      static_cast<std::size_t>(h.cols()));
    for (Eigen::Index p = 0; p < h.rows(); ++p) {
      for (Eigen::Index q = 0; q < h.cols(); ++q) {
        out(static_cast<std::size_t>(p), static_cast<std::size_t>(q)) = h(p, q);
      }
    }
    return out;
  }

  // f_ij = ||a_i b_j^dagger||_F^2 - M_ij
  Eigen::VectorXd residuals(const std::vector<Mat>& a, const std::vector<Mat>& b) const {
    Eigen::VectorXd f(static_cast<Eigen::Index>(n_ * k_));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        const auto e = static_cast<Eigen::Index>(idx(i, j));
        f(e) = (a[i] * b[j].adjoint()).squaredNorm() - target_(e);
      }
    }
    return f;
  }

  // K[(ij),(kl)] = 4([i==k] Re<G_ij,G_il> + [j==l] Re<H_ij,H_kj>)
  Eigen::MatrixXd normal_matrix(const std::vector<Mat>& g,
                                const std::vector<Mat>& h) const {
    const auto nm = static_cast<Eigen::Index>(n_ * k_);
    const auto rr = static_cast<Eigen::Index>(r_ * r_);
    Eigen::MatrixXd kmat = Eigen::MatrixXd::Zero(nm, nm);
    Mat stack(rr, static_cast<Eigen::Index>(std::max(n_, k_)));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        stack.col(static_cast<Eigen::Index>(j)) =
            Eigen::Map<const Eigen::VectorXcd>(g[idx(i, j)].data(), rr);
      }
      const auto block = stack.leftCols(static_cast<Eigen::Index>(k_));
      const Eigen::MatrixXd gram_re = (block.adjoint() * block).real();
      for (std::size_t j = 0; j < k_; ++j) {
        for (std::size_t l = 0; l < k_; ++l) {
          kmat(static_cast<Eigen::Index>(idx(i, j)), static_cast<Eigen::Index>(idx(i, l))) +=
              4.0 * gram_re(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l));
        }
      }
    }
    for (std::size_t j = 0; j < k_; ++j) {
      for (std::size_t i = 0; i < n_; ++i) {
        stack.col(static_cast<Eigen::Index>(i)) =
            Eigen::Map<const Eigen::VectorXcd>(h[idx(i, j)].data(), rr);
      }
      const auto block = stack.leftCols(static_cast<Eigen::Index>(n_));
      const Eigen::MatrixXd gram_re = (block.adjoint() * block).real();
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t p = 0; p < n_; ++p) {
          kmat(static_cast<Eigen::Index>(idx(i, j)), static_cast<Eigen::Index>(idx(p, j))) +=
              4.0 * gram_re(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(p));
        }
      }
    }
    return kmat;
  }

  std::size_t n_;
  std::size_t k_;
  std::size_t r_;
  SolverOptions opts_;
  Eigen::VectorXd target_;
  double norm_ = 1.0;
};

}  // namespace

SolverResult solve_factorization(const ChannelMatrix& m, std::size_t r,
                                 const SolverOptions& opts) {
  if (r == 0) throw DomainError("solve_factorization: r must be >= 1");
  if (m.rows() == 0 || m.cols() == 0) {
    throw DimensionError("solve_factorization: empty matrix");
  }
  require_nonnegative(m, "solve_factorization");
  const std::size_t restarts = std::max<std::size_t>(opts.restarts, 1);
  const Problem problem(m, r, opts);

  std::vector<Restart> results(restarts);
  auto work = [&](std::size_t s) { results[s] = problem.run(mix_seed(opts.seed + s)); };
  if (opts.parallel && restarts > 1) {
    const std::size_t workers = std::min<std::size_t>(
        std::max(1u, std::thread::hardware_concurrency()), restarts);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t s = w; s < restarts; s += workers) work(s);
      });
    }
    for (auto& t : pool) t.join();
  } else {
    for (std::size_t s = 0; s < restarts; ++s) work(s);
  }

  SolverResult out;
  for (std::size_t s = 0; s < restarts; ++s) {
    out.restart_residuals.push_back(results[s].residual);
    if (results[s].residual < results[out.best_restart].residual) out.best_restart = s;
  }
  out.factorization = problem.to_factorization(results[out.best_restart]);
  out.residual = results[out.best_restart].residual;
  out.max_abs_residual = max_abs_diff(realized_matrix(out.factorization), m);
  out.success = out.residual <= opts.success_threshold;
  return out;
}

}  // namespace esl
