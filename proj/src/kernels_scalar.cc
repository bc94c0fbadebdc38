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

#include "kernels_internal.h"

namespace chshb::kernels {

void quadratic_forms_scalar(const PackedHermitian4 &op, const AmplitudeBatch &batch, double *out, size_t begin,
                            size_t end) {
    for (size_t s = begin; s < end; s++) {
        double re[4];
        double im[4];
        for (size_t k = 0; k < 4; k++) {
            re[k] = batch.re(k)[s];
            im[k] = batch.im(k)[s];
        }
        double diag = 0;
        for (size_t k = 0; k < 4; k++) {
            diag += op.diag[k] * (re[k] * re[k] + im[k] * im[k]);
        }
        // Re(conj(psi_p) M_pq psi_q), counted twice for the lower triangle.
        double cross = 0;
        for (size_t u = 0; u < 6; u++) {
            size_t p = kUpperPairs[u][0];
            size_t q = kUpperPairs[u][1];
            double sym = re[p] * re[q] + im[p] * im[q];
            double anti = re[p] * im[q] - im[p] * re[q];
            cross += op.upper_re[u] * sym - op.upper_im[u] * anti;
        }
        out[s] = diag + 2.0 * cross;
    }
}

}  // namespace chshb::kernels
