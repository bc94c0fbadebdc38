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

// Independent reference computations for the tests. Nothing here calls into
// the library's linear algebra.

#ifndef CHSHB_TESTS_ORACLE_H
#define CHSHB_TESTS_ORACLE_H

#include <array>
#include <cmath>
#include <complex>

namespace chshb::oracle {

using C = std::complex<double>;
using State = std::array<C, 4>;

/// <psi| sigma(alpha) (x) sigma(beta) |psi> with sigma(t) = cos t Z + sin t X,
/// evaluated by explicit summation over basis indices.
inline double correlator(const State &psi, double alpha, double beta) {
    auto sigma = [](double t, int r, int c) -> double {
        if (r == c) {
            return r == 0 ? std::cos(t) : -std::cos(t);
        }
        return std::sin(t);
    };
    C acc = 0;
    for (int i1 = 0; i1 < 2; i1++) {
        for (int i2 = 0; i2 < 2; i2++) {
            for (int j1 = 0; j1 < 2; j1++) {
                for (int j2 = 0; j2 < 2; j2++) {
                    acc += std::conj(psi[2 * i1 + i2]) * sigma(alpha, i1, j1) * sigma(beta, i2, j2) * psi[2 * j1 + j2];
                }
            }
        }
    }
    return acc.real();
}

/// CHSH value for the one-parameter settings (party I at 2t and 0, party II at t and 3t).
inline double chsh(const State &psi, double theta) {
    return correlator(psi, 2 * theta, theta) + correlator(psi, 2 * theta, 3 * theta) + correlator(psi, 0, theta) -
           correlator(psi, 0, 3 * theta);
}

/// The Bell operator squares to 4 I - [A,a] (x) [B,b]; for z-x plane spins the
/// commutator term has norm 4 |sin(angle(A,a))| |sin(angle(B,b))|, so the
/// largest eigenvalue is 2 sqrt(1 + sin^2(2 theta)).
inline double bell_max_eigenvalue(double theta) {
    double s = std::sin(2 * theta);
    return 2.0 * std::sqrt(1.0 + s * s);
}

inline State singlet() {
    double h = 1.0 / std::sqrt(2.0);
    return {0.0, h, -h, 0.0};
}

inline State phi_plus() {
    double h = 1.0 / std::sqrt(2.0);
    return {h, 0.0, 0.0, h};
}

}  // namespace chshb::oracle

#endif
