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

// Inner loops of the dense complex algebra. Each kernel exists as a scalar
// reference and, on x86-64, as an AVX2+FMA variant. The variant is chosen once
// at first use from CPUID; ESL_KERNELS=scalar forces the reference path.
//
// All buffers hold std::complex<double> in the standard interleaved layout
// (re, im). Kernels never allocate and never alias output with input unless
// stated.

#pragma once

#include <complex>
#include <cstddef>

namespace esl::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  const char* name;

  /// c[m x n] = a[m x k] * b[k x n], row-major. c must not alias a or b.
  void (*gemm)(const cplx* a, const cplx* b, cplx* c, std::size_t m,
               std::size_t k, std::size_t n);

  /// sum_i conj(x_i) * y_i
  cplx (*dot_conj)(const cplx* x, const cplx* y, std::size_t n);

  /// y += alpha * x
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);

  /// y = alpha * x  (y may alias x)
  void (*scale)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
};

const KernelTable& scalar_kernels();

/// AVX2+FMA kernels, or nullptr when not compiled in or not supported by the
/// running CPU.
const KernelTable* avx2_kernels();

/// The table used by the library.
const KernelTable& active_kernels();

}  // namespace esl::kernels
