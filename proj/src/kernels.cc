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

#include "chshb/kernels.h"

#include "chshb/error.h"
#include "kernels_internal.h"

namespace chshb {

AmplitudeBatch::AmplitudeBatch(size_t capacity) {
    for (size_t k = 0; k < 4; k++) {
        re_[k].reserve(capacity);
        im_[k].reserve(capacity);
    }
}

void AmplitudeBatch::push_back(const Amplitudes &psi) {
    for (size_t k = 0; k < 4; k++) {
        re_[k].push_back(psi[k].real());
        im_[k].push_back(psi[k].imag());
    }
    size_++;
}

void AmplitudeBatch::clear() {
    for (size_t k = 0; k < 4; k++) {
        re_[k].clear();
        im_[k].clear();
    }
    size_ = 0;
}

Amplitudes AmplitudeBatch::at(size_t s) const {
    Amplitudes psi;
    for (size_t k = 0; k < 4; k++) {
        psi[k] = {re_[k][s], im_[k][s]};
    }
    return psi;
}

std::string_view backend_name(KernelBackend backend) {
    switch (backend) {
        case KernelBackend::Scalar:
            return "scalar";
        case KernelBackend::Avx2:
            return "avx2";
    }
    return "unknown";
}

bool backend_available(KernelBackend backend) {
    switch (backend) {
        case KernelBackend::Scalar:
            return true;
        case KernelBackend::Avx2:
#if defined(CHSHB_HAVE_AVX2_KERNELS)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
    }
    return false;
}

KernelBackend best_backend() {
    static const KernelBackend best =
        backend_available(KernelBackend::Avx2) ? KernelBackend::Avx2 : KernelBackend::Scalar;
    return best;
}

PackedHermitian4 PackedHermitian4::from(const Operator4 &op) {
    if (!op.is_hermitian()) {
        throw ChshError(ErrorCode::NonHermitianOperator, "cannot pack a non-Hermitian operator");
    }
    PackedHermitian4 packed;
    for (size_t k = 0; k < 4; k++) {
        packed.diag[k] = op(k, k).real();
    }
    for (size_t u = 0; u < 6; u++) {
        Complex m = op(kernels::kUpperPairs[u][0], kernels::kUpperPairs[u][1]);
        packed.upper_re[u] = m.real();
        packed.upper_im[u] = m.imag();
    }
    return packed;
}

void quadratic_forms(const PackedHermitian4 &op, const AmplitudeBatch &batch, std::span<double> out,
                     KernelBackend backend) {
    if (out.size() != batch.size()) {
        throw ChshError(ErrorCode::InvalidArgument, "output span size does not match batch size");
    }
    if (!backend_available(backend)) {
        throw ChshError(ErrorCode::InvalidArgument,
                        "kernel backend '" + std::string(backend_name(backend)) + "' is not available");
    }
    switch (backend) {
        case KernelBackend::Scalar:
            kernels::quadratic_forms_scalar(op, batch, out.data(), 0, batch.size());
            return;
        case KernelBackend::Avx2:
#if defined(CHSHB_HAVE_AVX2_KERNELS)
            kernels::quadratic_forms_avx2(op, batch, out.data(), 0, batch.size());
#endif
            return;
    }
}

void quadratic_forms(const PackedHermitian4 &op, const AmplitudeBatch &batch, std::span<double> out) {
    quadratic_forms(op, batch, out, best_backend());
}

}  // namespace chshb
