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

#include "chshb/linalg.h"

#include <cmath>
#include <string>

#include "chshb/error.h"

namespace chshb {

namespace {

constexpr size_t kEmbedDim = 8;
constexpr int kMaxJacobiSweeps = 100;
constexpr double kJacobiOffDiagonalTolerance = 1e-12;

using RealMatrix8 = std::array<std::array<double, kEmbedDim>, kEmbedDim>;

bool is_finite(Complex c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
}

void require_hermitian(const Operator4 &op) {
    if (!op.is_hermitian()) {
        throw ChshError(ErrorCode::NonHermitianOperator, "operator is not Hermitian within 1e-12");
    }
}

double off_diagonal_norm(const RealMatrix8 &a) {
    double s = 0;
    for (size_t p = 0; p < kEmbedDim; p++) {
        for (size_t q = 0; q < kEmbedDim; q++) {
            if (p != q) {
                s += a[p][q] * a[p][q];
            }
        }
    }
    return std::sqrt(s);
}

// [[Re H, -Im H], [Im H, Re H]] is real symmetric and carries each eigenvalue of H twice.
RealMatrix8 real_embedding(const Operator4 &op) {
    RealMatrix8 m{};
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            double re = op(r, c).real();
            double im = op(r, c).imag();
            m[r][c] = re;
            m[r + 4][c + 4] = re;
            m[r][c + 4] = -im;
            m[r + 4][c] = im;
        }
    }
    return m;
}

std::array<double, kEmbedDim> jacobi_eigenvalues(RealMatrix8 a) {
    int sweep = 0;
    while (off_diagonal_norm(a) >= kJacobiOffDiagonalTolerance) {
        if (sweep++ >= kMaxJacobiSweeps) {
            throw ChshError(ErrorCode::NoConvergence, "Jacobi sweep limit exceeded");
        }
        for (size_t p = 0; p < kEmbedDim - 1; p++) {
            for (size_t q = p + 1; q < kEmbedDim; q++) {
                double apq = a[p][q];
                if (apq == 0.0) {
                    continue;
                }
                double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0) {
                    t = -t;
                }
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (size_t k = 0; k < kEmbedDim; k++) {
                    double akp = a[k][p];
                    double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (size_t k = 0; k < kEmbedDim; k++) {
                    double apk = a[p][k];
                    double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }
    std::array<double, kEmbedDim> diag{};
    for (size_t k = 0; k < kEmbedDim; k++) {
        diag[k] = a[k][k];
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

}  // namespace

Operator2 pauli(PauliAxis axis) {
    Operator2 m;
    switch (axis) {
        case PauliAxis::X:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case PauliAxis::Y:
            m(0, 1) = Complex(0, -1);
            m(1, 0) = Complex(0, 1);
            break;
        case PauliAxis::Z:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
    }
    return m;
}

Operator4 tensor(const Operator2 &a, const Operator2 &b) {
    Operator4 m;
    for (size_t ar = 0; ar < 2; ar++) {
        for (size_t ac = 0; ac < 2; ac++) {
            for (size_t br = 0; br < 2; br++) {
                for (size_t bc = 0; bc < 2; bc++) {
                    m(2 * ar + br, 2 * ac + bc) = a(ar, ac) * b(br, bc);
                }
            }
        }
    }
    return m;
}

TwoQubitState TwoQubitState::pure(const Amplitudes &amplitudes) {
    double norm2 = 0;
    for (const auto &a : amplitudes) {
        if (!is_finite(a)) {
            throw ChshError(ErrorCode::InvalidState, "non-finite amplitude");
        }
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > kStateNormTolerance) {
        throw ChshError(ErrorCode::InvalidState, "amplitudes are not normalized (norm^2 = " + std::to_string(norm2) + ")");
    }
    return TwoQubitState(amplitudes);
}

TwoQubitState TwoQubitState::mixed(const Operator4 &rho) {
    for (const auto &e : rho.entries) {
        if (!is_finite(e)) {
            throw ChshError(ErrorCode::InvalidState, "non-finite density matrix entry");
        }
    }
    if (!rho.is_hermitian(kStateNormTolerance)) {
        throw ChshError(ErrorCode::InvalidState, "density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - 1.0) > kStateNormTolerance) {
        throw ChshError(ErrorCode::InvalidState, "density matrix trace is not 1");
    }
    // Symmetrize so that the eigen oracle's 1e-12 Hermiticity check cannot reject a
    // matrix that passed the looser state tolerance.
    Operator4 sym = rho + rho.adjoint();
    sym *= 0.5;
    if (hermitian_eigen_extrema(sym).min < -kNegativeEigenvalueTolerance) {
        throw ChshError(ErrorCode::InvalidState, "density matrix has a negative eigenvalue");
    }
    return TwoQubitState(sym);
}

Operator4 TwoQubitState::density() const {
    if (const auto *amps = std::get_if<Amplitudes>(&data_)) {
        Operator4 rho;
        for (size_t r = 0; r < 4; r++) {
            for (size_t c = 0; c < 4; c++) {
                rho(r, c) = (*amps)[r] * std::conj((*amps)[c]);
            }
        }
        return rho;
    }
    return std::get<Operator4>(data_);
}

TwoQubitState TwoQubitState::apply_local_I(const Operator2 &u) const {
    Operator4 full = tensor(u, Operator2::identity());
    if (const auto *amps = std::get_if<Amplitudes>(&data_)) {
        return TwoQubitState::pure(full * *amps);
    }
    return TwoQubitState::mixed(full * std::get<Operator4>(data_) * full.adjoint());
}

double TwoQubitState::purity() const {
    if (is_pure()) {
        return 1.0;
    }
    const Operator4 &rho = std::get<Operator4>(data_);
    return (rho * rho).trace().real();
}

double expectation(const Operator4 &op, const TwoQubitState &state) {
    require_hermitian(op);
    Complex value = 0;
    if (state.is_pure()) {
        const Amplitudes &psi = state.amplitudes();
        Amplitudes op_psi = op * psi;
        for (size_t k = 0; k < 4; k++) {
            value += std::conj(psi[k]) * op_psi[k];
        }
    } else {
        value = (state.density() * op).trace();
    }
    if (std::abs(value.imag()) >= kImaginaryResidueTolerance) {
        throw ChshError(ErrorCode::ImaginaryExpectation, "imaginary residue " + std::to_string(value.imag()));
    }
    return value.real();
}

std::array<double, 4> hermitian_eigenvalues(const Operator4 &op) {
    require_hermitian(op);
    auto doubled = jacobi_eigenvalues(real_embedding(op));
    std::array<double, 4> values{};
    for (size_t k = 0; k < 4; k++) {
        values[k] = 0.5 * (doubled[2 * k] + doubled[2 * k + 1]);
    }
    return values;
}

EigenExtrema hermitian_eigen_extrema(const Operator4 &op) {
    auto values = hermitian_eigenvalues(op);
    return {values.front(), values.back()};
}

TwoQubitState haar_random_pure(RngStream &rng) {
    Amplitudes psi;
    double norm2 = 0;
    do {
        norm2 = 0;
        for (auto &a : psi) {
            a = rng.complex_gaussian();
            norm2 += std::norm(a);
        }
    } while (norm2 == 0.0);
    double inv = 1.0 / std::sqrt(norm2);
    for (auto &a : psi) {
        a *= inv;
    }
    return TwoQubitState::pure(psi);
}

TwoQubitState random_density(int rank, RngStream &rng) {
    if (rank < 1 || rank > 4) {
        throw ChshError(ErrorCode::InvalidRank, "rank must be in 1..4, got " + std::to_string(rank));
    }
    std::array<Amplitudes, 4> columns{};
    for (int k = 0; k < rank; k++) {
        for (auto &g : columns[k]) {
            g = rng.complex_gaussian();
        }
    }
    Operator4 rho;
    for (int k = 0; k < rank; k++) {
        for (size_t r = 0; r < 4; r++) {
            for (size_t c = 0; c < 4; c++) {
                rho(r, c) += columns[k][r] * std::conj(columns[k][c]);
            }
        }
    }
    rho *= 1.0 / rho.trace().real();
    return TwoQubitState::mixed(rho);
}

Operator2 reduced_state_I(const TwoQubitState &state) {
    Operator4 rho = state.density();
    Operator2 out;
    for (size_t a = 0; a < 2; a++) {
        for (size_t ap = 0; ap < 2; ap++) {
            for (size_t b = 0; b < 2; b++) {
                out(a, ap) += rho(2 * a + b, 2 * ap + b);
            }
        }
    }
    return out;
}

Operator2 reduced_state_II(const TwoQubitState &state) {
    Operator4 rho = state.density();
    Operator2 out;
    for (size_t b = 0; b < 2; b++) {
        for (size_t bp = 0; bp < 2; bp++) {
            for (size_t a = 0; a < 2; a++) {
                out(b, bp) += rho(2 * a + b, 2 * a + bp);
            }
        }
    }
    return out;
}

double fidelity(const Amplitudes &a, const Amplitudes &b) {
    Complex overlap = 0;
    for (size_t k = 0; k < 4; k++) {
        overlap += std::conj(a[k]) * b[k];
    }
    return std::norm(overlap);
}

}  // namespace chshb
