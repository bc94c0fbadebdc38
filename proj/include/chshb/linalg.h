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

#ifndef CHSHB_LINALG_H
#define CHSHB_LINALG_H

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <variant>

#include "chshb/rng.h"

namespace chshb {

using Complex = std::complex<double>;

/// Absolute tolerance for conjugate symmetry checks.
inline constexpr double kHermitianTolerance = 1e-12;
/// Imaginary residue of an expectation value above which it is rejected.
inline constexpr double kImaginaryResidueTolerance = 1e-10;
/// Norm / trace tolerance for valid states.
inline constexpr double kStateNormTolerance = 1e-10;
/// Smallest eigenvalue allowed for a density matrix.
inline constexpr double kNegativeEigenvalueTolerance = 1e-9;

/// Dense N x N complex matrix, row-major, value semantics.
template <size_t N>
struct SquareMatrix {
    std::array<Complex, N * N> entries{};

    static constexpr size_t dim = N;

    static SquareMatrix identity() {
        SquareMatrix m;
        for (size_t k = 0; k < N; k++) {
            m(k, k) = 1.0;
        }
        return m;
    }

    Complex &operator()(size_t row, size_t col) {
        return entries[row * N + col];
    }
    const Complex &operator()(size_t row, size_t col) const {
        return entries[row * N + col];
    }

    SquareMatrix adjoint() const {
        SquareMatrix m;
        for (size_t r = 0; r < N; r++) {
            for (size_t c = 0; c < N; c++) {
                m(r, c) = std::conj((*this)(c, r));
            }
        }
        return m;
    }

    Complex trace() const {
        Complex t = 0;
        for (size_t k = 0; k < N; k++) {
            t += (*this)(k, k);
        }
        return t;
    }

    bool is_hermitian(double tolerance = kHermitianTolerance) const {
        for (size_t r = 0; r < N; r++) {
            for (size_t c = r; c < N; c++) {
                if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tolerance) {
                    return false;
                }
            }
        }
        return true;
    }

    /// Largest absolute entry difference.
    double max_abs_diff(const SquareMatrix &other) const {
        double d = 0;
        for (size_t k = 0; k < N * N; k++) {
            d = std::max(d, std::abs(entries[k] - other.entries[k]));
        }
        return d;
    }

    SquareMatrix &operator+=(const SquareMatrix &rhs) {
        for (size_t k = 0; k < N * N; k++) {
            entries[k] += rhs.entries[k];
        }
        return *this;
    }
    SquareMatrix &operator-=(const SquareMatrix &rhs) {
        for (size_t k = 0; k < N * N; k++) {
            entries[k] -= rhs.entries[k];
        }
        return *this;
    }
    SquareMatrix &operator*=(Complex s) {
        for (auto &e : entries) {
            e *= s;
        }
        return *this;
    }

    friend SquareMatrix operator+(SquareMatrix lhs, const SquareMatrix &rhs) {
        return lhs += rhs;
    }
    friend SquareMatrix operator-(SquareMatrix lhs, const SquareMatrix &rhs) {
        return lhs -= rhs;
    }
    friend SquareMatrix operator*(Complex s, SquareMatrix m) {
        return m *= s;
    }
    friend SquareMatrix operator*(const SquareMatrix &a, const SquareMatrix &b) {
        SquareMatrix m;
        for (size_t r = 0; r < N; r++) {
            for (size_t k = 0; k < N; k++) {
                Complex ark = a(r, k);
                for (size_t c = 0; c < N; c++) {
                    m(r, c) += ark * b(k, c);
                }
            }
        }
        return m;
    }
    friend std::array<Complex, N> operator*(const SquareMatrix &a, const std::array<Complex, N> &v) {
        std::array<Complex, N> out{};
        for (size_t r = 0; r < N; r++) {
            for (size_t c = 0; c < N; c++) {
                out[r] += a(r, c) * v[c];
            }
        }
        return out;
    }
};

using Operator2 = SquareMatrix<2>;
using Operator4 = SquareMatrix<4>;
using Amplitudes = std::array<Complex, 4>;

enum class PauliAxis { X, Y, Z };

/// Pauli matrix in the computational basis, |0> the +1 eigenvector of sigma_z.
Operator2 pauli(PauliAxis axis);

/// Kronecker product with qubit I as the left factor. Basis order |00>,|01>,|10>,|11>.
Operator4 tensor(const Operator2 &a, const Operator2 &b);

/// A two-qubit state: either a normalized pure vector or a density matrix.
///
/// The factories validate their input; a constructed state always satisfies
/// its invariants (unit norm / Hermitian, unit trace, positive semidefinite).
class TwoQubitState {
   public:
    static TwoQubitState pure(const Amplitudes &amplitudes);
    static TwoQubitState mixed(const Operator4 &rho);

    bool is_pure() const {
        return std::holds_alternative<Amplitudes>(data_);
    }
    /// Precondition: is_pure().
    const Amplitudes &amplitudes() const {
        return std::get<Amplitudes>(data_);
    }
    /// The density matrix; a projector for pure states.
    Operator4 density() const;

    /// (U (x) I) state (U (x) I)^dagger, with U acting on qubit I.
    TwoQubitState apply_local_I(const Operator2 &u) const;

    double purity() const;

   private:
    explicit TwoQubitState(Amplitudes a) : data_(a) {
    }
    explicit TwoQubitState(const Operator4 &rho) : data_(rho) {
    }

    std::variant<Amplitudes, Operator4> data_;
};

/// <psi|op|psi> for pure states, Tr(rho op) otherwise.
/// Throws NonHermitianOperator or ImaginaryExpectation.
double expectation(const Operator4 &op, const TwoQubitState &state);

struct EigenExtrema {
    double min;
    double max;
};

/// Eigenvalues of a Hermitian 4x4 matrix via cyclic Jacobi on its 8x8 real embedding.
std::array<double, 4> hermitian_eigenvalues(const Operator4 &op);
/// Smallest and largest eigenvalues. Throws NonHermitianOperator or NoConvergence.
EigenExtrema hermitian_eigen_extrema(const Operator4 &op);

/// Haar-random pure state (normalized complex Gaussian vector).
TwoQubitState haar_random_pure(RngStream &rng);
/// G G^dagger / Tr(G G^dagger) for a 4 x rank complex Gaussian G. Throws InvalidRank.
TwoQubitState random_density(int rank, RngStream &rng);

/// Reduced density matrix of qubit I (trace over qubit II).
Operator2 reduced_state_I(const TwoQubitState &state);
/// Reduced density matrix of qubit II (trace over qubit I).
Operator2 reduced_state_II(const TwoQubitState &state);

/// |<a|b>|^2 for pure states, insensitive to global phase.
double fidelity(const Amplitudes &a, const Amplitudes &b);

}  // namespace chshb

#endif
