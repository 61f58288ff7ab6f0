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

#pragma once

#include "esl/tensor/kernels.hpp"

namespace esl::kernels::detail {

#if defined(ESL_HAVE_AVX2_KERNELS)
// Defined in kernels_avx2.cpp, which is the only TU built with -mavx2 -mfma.
// Must not be called unless the CPU reports AVX2 and FMA.
const KernelTable& avx2_table();
#endif

}  // namespace esl::kernels::detail
