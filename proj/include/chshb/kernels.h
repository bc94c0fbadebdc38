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

#ifndef CHSHB_KERNELS_H
#define CHSHB_KERNELS_H

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "chshb/linalg.h"

namespace chshb {

/// Many pure two-qubit states in structure-of-arrays layout: re[k][s] is the
/// real part of amplitude k of state s.
class AmplitudeBatch {
   public:
    AmplitudeBatch() = default;
    explicit AmplitudeBatch(size_t capacity);

    void push_back(const Amplitudes &psi);
    void clear();
    size_t size() const {
        return size_;
    }
    Amplitudes at(size_t s) const;

    const double *re(size_t k) const {
        return re_[k].data();
    }
    const double *im(size_t k) const {
        return im_[k].data();
    }

   private:
    std::array<std::vector<double>, 4> re_;
    std::array<std::vector<double>, 4> im_;
    size_t size_ = 0;
};

enum class KernelBackend { Scalar, Avx2 };

std::string_view backend_name(KernelBackend backend);
/// True when the backend was compiled in and the running CPU supports it.
bool backend_available(KernelBackend backend);
/// The fastest available backend, detected once at first call.
KernelBackend best_backend();

/// Packed Hermitian 4x4 operator: diagonal plus the strict upper triangle,
/// in the form the kernels consume.
struct PackedHermitian4 {
    std::array<double, 4> diag{};
    std::array<double, 6> upper_re{};
    std::array<double, 6> upper_im{};

    /// Throws NonHermitianOperator.
    static PackedHermitian4 from(const Operator4 &op);
};

/// out[s] = <psi_s|op|psi_s> for every state in the batch.
/// Preconditions: out.size() == batch.size(); backend_available(backend).
void quadratic_forms(const PackedHermitian4 &op, const AmplitudeBatch &batch, std::span<double> out,
                     KernelBackend backend);
void quadratic_forms(const PackedHermitian4 &op, const AmplitudeBatch &batch, std::span<double> out);

}  // namespace chshb

#endif
