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

#include "chshb/bounds.h"

#include <cassert>
#include <cmath>
#include <numbers>
#include <string>

#include "chshb/error.h"

namespace chshb {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_theta(double theta) {
    if (!(theta >= 0.0 && theta <= kPi)) {
        throw ChshError(ErrorCode::ThetaOutOfRange, "theta must lie in [0, pi], got " + std::to_string(theta));
    }
}

// [1 + sin^2(2 theta)]^(-1/2)
double inverse_root(double theta) {
    double s = std::sin(2 * theta);
    return 1.0 / std::sqrt(1.0 + s * s);
}

}  // namespace

double branch_sign(double theta) {
    return theta < kPi / 2 ? 1.0 : -1.0;
}

double normalize_angle(double xi) {
    double r = std::fmod(xi, 2 * kPi);
    if (r < 0) {
        r += 2 * kPi;
    }
    if (r >= 2 * kPi) {
        r = 0.0;
    }
    return r;
}

double optimal_xi(double theta, Branch branch) {
    require_theta(theta);
    double xi = 0.5 * (theta - branch_sign(theta) * std::acos(inverse_root(theta)));
    if (branch == Branch::Lower) {
        // The CHSH value along the frontier family is F cos(2 (xi - xi_upper)),
        // so the minimum sits a quarter period past the maximum.
        xi += kPi / 2;
    }
    return normalize_angle(xi);
}

QuantumBound quantum_bound(double theta) {
    require_theta(theta);
    double s = std::sin(2 * theta);
    double radicand = 1.0 + 2.0 / (std::cos(4 * theta) - 3.0);
    assert(radicand >= 0.0);
    double upper = 2.0 * (inverse_root(theta) + branch_sign(theta) * s * std::sqrt(radicand));
    return {
        .theta = theta,
        .upper = upper,
        .lower = -upper,
        .xi_upper = optimal_xi(theta, Branch::Upper),
        .xi_lower = optimal_xi(theta, Branch::Lower),
    };
}

TwoQubitState singlet() {
    return TwoQubitState::pure({0.0, kInvSqrt2, -kInvSqrt2, 0.0});
}

TwoQubitState phi_plus() {
    return TwoQubitState::pure({kInvSqrt2, 0.0, 0.0, kInvSqrt2});
}

TwoQubitState frontier_state(double xi) {
    double c = std::cos(xi) * kInvSqrt2;
    double s = std::sin(xi) * kInvSqrt2;
    return TwoQubitState::pure({c, s, -s, c});
}

Operator2 rotation_u(double xi) {
    Operator2 u;
    u(0, 0) = std::sin(xi);
    u(0, 1) = -std::cos(xi);
    u(1, 0) = std::cos(xi);
    u(1, 1) = std::sin(xi);
    return u;
}

TwoQubitState prepare_from_singlet(double xi) {
    return singlet().apply_local_I(rotation_u(xi));
}

}  // namespace chshb
