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

#include "chshb/observables.h"

#include <cmath>
#include <numbers>
#include <random>

#include "chshb/bounds.h"
#include "chshb/error.h"
#include "gtest/gtest.h"
#include "oracle.h"

using namespace chshb;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

Operator2 combo(double z, double x) {
    return z * pauli(PauliAxis::Z) + x * pauli(PauliAxis::X);
}

oracle::State as_oracle(const TwoQubitState &s) {
    return s.amplitudes();
}

}  // namespace

TEST(make_settings, theta_zero_collapses_to_sigma_z) {
    MeasurementSettings s = make_settings(0.0);
    Operator2 z = pauli(PauliAxis::Z);
    ASSERT_EQ(s.A.max_abs_diff(z), 0.0);
    ASSERT_EQ(s.B.max_abs_diff(z), 0.0);
    ASSERT_EQ(s.a.max_abs_diff(z), 0.0);
    ASSERT_EQ(s.b.max_abs_diff(z), 0.0);
}

TEST(make_settings, quarter_pi) {
    MeasurementSettings s = make_settings(kPi / 4);
    ASSERT_LT(s.A.max_abs_diff(pauli(PauliAxis::X)), 1e-15);
    ASSERT_LT(s.B.max_abs_diff(combo(1 / kSqrt2, 1 / kSqrt2)), 1e-15);
    ASSERT_LT(s.b.max_abs_diff(combo(-1 / kSqrt2, 1 / kSqrt2)), 1e-15);
    ASSERT_EQ(s.a.max_abs_diff(pauli(PauliAxis::Z)), 0.0);
}

TEST(make_settings, pi) {
    MeasurementSettings s = make_settings(kPi);
    Operator2 z = pauli(PauliAxis::Z);
    ASSERT_LT(s.A.max_abs_diff(z), 1e-15);
    ASSERT_LT(s.B.max_abs_diff(-1.0 * z), 1e-15);
    ASSERT_LT(s.b.max_abs_diff(-1.0 * z), 1e-15);
}

TEST(make_settings, rejects_out_of_range_without_wrapping) {
    for (double theta : {-1e-12, kPi + 1e-9, 4.0, std::nan("")}) {
        try {
            make_settings(theta);
            FAIL() << theta;
        } catch (const ChshError &e) {
            ASSERT_EQ(e.code(), ErrorCode::ThetaOutOfRange);
        }
    }
}

TEST(make_settings, observables_square_to_identity) {
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> u(0.0, kPi);
    for (int trial = 0; trial < 200; trial++) {
        MeasurementSettings s = make_settings(u(gen));
        for (const Operator2 *o : {&s.A, &s.a, &s.B, &s.b}) {
            ASSERT_TRUE(o->is_hermitian());
            ASSERT_LT((*o * *o).max_abs_diff(Operator2::identity()), 1e-12);
        }
    }
}

TEST(chsh_operator, theta_zero_is_twice_zz) {
    Operator4 zz = tensor(pauli(PauliAxis::Z), pauli(PauliAxis::Z));
    ASSERT_LT(chsh_operator(make_settings(0.0)).matrix.max_abs_diff(2.0 * zz), 1e-15);
}

TEST(chsh_operator, quarter_pi_spectrum_reaches_tsirelson) {
    EigenExtrema e = hermitian_eigen_extrema(chsh_operator(make_settings(kPi / 4)).matrix);
    ASSERT_NEAR(e.max, 2 * kSqrt2, 1e-10);
    ASSERT_NEAR(e.min, -2 * kSqrt2, 1e-10);
}

TEST(chsh_operator, hermitian_and_traceless) {
    std::mt19937_64 gen(2);
    std::uniform_real_distribution<double> u(0.0, kPi);
    for (int trial = 0; trial < 200; trial++) {
        Operator4 m = chsh_operator(make_settings(u(gen))).matrix;
        ASSERT_TRUE(m.is_hermitian());
        ASSERT_LT(std::abs(m.trace()), 1e-12);
    }
}

TEST(chsh_value, bell_state_examples) {
    ASSERT_NEAR(chsh_value(make_settings(kPi / 4), singlet()), -2 * kSqrt2, 1e-12);
    ASSERT_NEAR(chsh_value(make_settings(0.0), singlet()), -2.0, 1e-12);
    ASSERT_NEAR(chsh_value(make_settings(kPi / 4), phi_plus()), 2 * kSqrt2, 1e-12);
    // Independent route: -3 cos(theta) + cos(3 theta) for the singlet.
    ASSERT_NEAR(oracle::chsh(oracle::singlet(), kPi / 4), -2 * kSqrt2, 1e-12);
}

TEST(chsh_value, matches_explicit_summation_oracle) {
    RngStream rng(3, 0);
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(0.0, kPi);
    for (int trial = 0; trial < 500; trial++) {
        double theta = u(gen);
        TwoQubitState s = haar_random_pure(rng);
        ASSERT_NEAR(chsh_value(make_settings(theta), s), oracle::chsh(as_oracle(s), theta), 1e-12);
    }
}

TEST(correlation_quadruple, examples) {
    CorrelationQuadruple q = correlation_quadruple(make_settings(0.0), singlet());
    for (int i = 0; i < 4; i++) {
        ASSERT_NEAR(q[i], -1.0, 1e-12);
    }
    CorrelationQuadruple p = correlation_quadruple(make_settings(kPi / 4), phi_plus());
    ASSERT_NEAR(p[0], 1 / kSqrt2, 1e-12);
    ASSERT_NEAR(p[1], 1 / kSqrt2, 1e-12);
    ASSERT_NEAR(p[2], 1 / kSqrt2, 1e-12);
    ASSERT_NEAR(p[3], -1 / kSqrt2, 1e-12);
}

TEST(correlation_quadruple, singlet_is_minus_cosine_of_relative_angle) {
    std::mt19937_64 gen(4);
    std::uniform_real_distribution<double> u(0.0, kPi);
    for (int trial = 0; trial < 200; trial++) {
        double t = u(gen);
        CorrelationQuadruple q = correlation_quadruple(make_settings(t), singlet());
        // Bloch angles: A = 2t, a = 0, B = t, b = 3t.
        ASSERT_NEAR(q[0], -std::cos(2 * t - t), 1e-10);
        ASSERT_NEAR(q[1], -std::cos(2 * t - 3 * t), 1e-10);
        ASSERT_NEAR(q[2], -std::cos(0 - t), 1e-10);
        ASSERT_NEAR(q[3], -std::cos(0 - 3 * t), 1e-10);
    }
}

TEST(correlation_quadruple, sums_to_chsh_value_and_stays_in_range) {
    RngStream rng(5, 0);
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(0.0, kPi);
    for (int trial = 0; trial < 500; trial++) {
        MeasurementSettings s = make_settings(u(gen));
        TwoQubitState state = (trial % 3 == 0) ? random_density(1 + trial % 4, rng) : haar_random_pure(rng);
        CorrelationQuadruple q = correlation_quadruple(s, state);
        for (int i = 0; i < 4; i++) {
            ASSERT_LE(std::abs(q[i]), 1.0 + 1e-9);
        }
        ASSERT_NEAR(q[0] + q[1] + q[2] - q[3], chsh_value(s, state), 1e-10);
    }
}

TEST(chsh_value, never_exceeds_tsirelson) {
    RngStream rng(6, 0);
    for (double theta : {0.0, 0.5, kPi / 4, 1.2, kPi / 2, 2.5, kPi}) {
        BellOperator bell = chsh_operator(make_settings(theta));
        for (int k = 0; k < 10000 / 7 + 1; k++) {
            TwoQubitState s = (k % 2) ? haar_random_pure(rng) : random_density(1 + k % 4, rng);
            ASSERT_LE(std::abs(chsh_value(bell, s)), 2 * kSqrt2 + 1e-9);
        }
    }
}
