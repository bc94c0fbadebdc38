// Copyright 2026 The chshb Authors
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

#ifndef CHSHB_KERNELS_INTERNAL_H
#define CHSHB_KERNELS_INTERNAL_H

#include <cstddef>

#include "chshb/kernels.h"

namespace chshb::kernels {

// Backend entry points over the half-open state range [begin, end).
void quadratic_forms_scalar(const PackedHermitian4 &op, const AmplitudeBatch &batch, double *out, size_t begin,
                            size_t end);
#if defined(CHSHB_HAVE_AVX2_KERNELS)
void quadratic_forms_avx2(const PackedHermitian4 &op, const AmplitudeBatch &batch, double *out, size_t begin,
                          size_t end);
#endif

/// Index pairs (p, q), p < q, in the order PackedHermitian4 stores them.
inline constexpr size_t kUpperPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

}  // namespace chshb::kernels

#endif
