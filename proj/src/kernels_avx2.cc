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

#include <immintrin.h>

#include "kernels_internal.h"

namespace chshb::kernels {

// Four states per iteration, one per 64-bit lane; the tail falls back to the
// scalar kernel.
void quadratic_forms_avx2(const PackedHermitian4 &op, const AmplitudeBatch &batch, double *out, size_t begin,
                          size_t end) {
    __m256d diag[4];
    for (size_t k = 0; k < 4; k++) {
        diag[k] = _mm256_set1_pd(op.diag[k]);
    }
    __m256d mre[6];
    __m256d mim[6];
    for (size_t u = 0; u < 6; u++) {
        mre[u] = _mm256_set1_pd(op.upper_re[u]);
        mim[u] = _mm256_set1_pd(op.upper_im[u]);
    }
    const __m256d two = _mm256_set1_pd(2.0);

    size_t s = begin;
    for (; s + 4 <= end; s += 4) {
        __m256d re[4];
        __m256d im[4];
        for (size_t k = 0; k < 4; k++) {
            re[k] = _mm256_loadu_pd(batch.re(k) + s);
            im[k] = _mm256_loadu_pd(batch.im(k) + s);
        }
        __m256d acc_diag = _mm256_setzero_pd();
        for (size_t k = 0; k < 4; k++) {
            __m256d n2 = _mm256_fmadd_pd(im[k], im[k], _mm256_mul_pd(re[k], re[k]));
            acc_diag = _mm256_fmadd_pd(diag[k], n2, acc_diag);
        }
        __m256d acc_cross = _mm256_setzero_pd();
        for (size_t u = 0; u < 6; u++) {
            size_t p = kUpperPairs[u][0];
            size_t q = kUpperPairs[u][1];
            __m256d sym = _mm256_fmadd_pd(im[p], im[q], _mm256_mul_pd(re[p], re[q]));
            __m256d anti = _mm256_fmsub_pd(re[p], im[q], _mm256_mul_pd(im[p], re[q]));
            acc_cross = _mm256_fmadd_pd(mre[u], sym, acc_cross);
            acc_cross = _mm256_fnmadd_pd(mim[u], anti, acc_cross);
        }
        _mm256_storeu_pd(out + s, _mm256_fmadd_pd(two, acc_cross, acc_diag));
    }
    quadratic_forms_scalar(op, batch, out, s, end);
}

}  // namespace chshb::kernels
