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

// One __m256d holds two interleaved complex doubles: [re0, im0, re1, im1].

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace esl::kernels::detail {
namespace {

inline const double* as_doubles(const cplx* p) {
  return reinterpret_cast<const double*>(p);
}
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

// alpha * v for a broadcast complex alpha = (ar, ai).
inline __m256d cmul_broadcast(__m256d ar, __m256d ai, __m256d v) {
  const __m256d v_swapped = _mm256_permute_pd(v, 0x5);  // [im, re, im, re]
  // even lanes: ar*re - ai*im, odd lanes: ar*im + ai*re
  return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, v_swapped));
}

inline cplx mul(cplx a, cplx b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const double* xs = as_doubles(x);
  double* ys = as_doubles(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    const __m256d yv = _mm256_loadu_pd(ys + 2 * i);
    _mm256_storeu_pd(ys + 2 * i, _mm256_add_pd(yv, cmul_broadcast(ar, ai, xv)));
  }
  for (; i < n; ++i) y[i] += mul(alpha, x[i]);
}

void scale_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const double* xs = as_doubles(x);
  double* ys = as_doubles(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    _mm256_storeu_pd(ys + 2 * i, cmul_broadcast(ar, ai, xv));
  }
  for (; i < n; ++i) y[i] = mul(alpha, x[i]);
}

void gemm_avx2(const cplx* a, const cplx* b, cplx* c, std::size_t m,
               std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t j = 0; j < n; ++j) crow[j] = 0.0;
    for (std::size_t p = 0; p < k; ++p) {
      axpy_avx2(a[i * k + p], b + p * n, crow, n);
    }
  }
}

cplx dot_conj_avx2(const cplx* x, const cplx* y, std::size_t n) {
  const double* xs = as_doubles(x);
  const double* ys = as_doubles(y);
  // direct: [xr*yr, xi*yi, ...] sums to the real part
  // cross:  [xr*yi, xi*yr, ...] even minus odd gives the imaginary part
  __m256d direct = _mm256_setzero_pd();
  __m256d cross = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    const __m256d yv = _mm256_loadu_pd(ys + 2 * i);
    direct = _mm256_fmadd_pd(xv, yv, direct);
    cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0x5), cross);
  }
  alignas(32) double d[4];
  alignas(32) double s[4];
  _mm256_store_pd(d, direct);
  _mm256_store_pd(s, cross);
  double re = (d[0] + d[2]) + (d[1] + d[3]);
  double im = (s[0] + s[2]) - (s[1] + s[3]);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", gemm_avx2, dot_conj_avx2, axpy_avx2,
                                 scale_avx2};
  return table;
}

}  // namespace esl::kernels::detail
