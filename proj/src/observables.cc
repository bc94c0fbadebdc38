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
#include <string>

#include "chshb/error.h"

namespace chshb {

Operator2 spin_along(double angle) {
    return std::cos(angle) * pauli(PauliAxis::Z) + std::sin(angle) * pauli(PauliAxis::X);
}

MeasurementSettings make_settings(double theta) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
        throw ChshError(ErrorCode::ThetaOutOfRange, "theta must lie in [0, pi], got " + std::to_string(theta));
    }
    MeasurementSettings s;
    s.theta = theta;
    s.A = spin_along(2 * theta);
    s.a = pauli(PauliAxis::Z);
    s.B = spin_along(theta);
    s.b = spin_along(3 * theta);
    return s;
}

BellOperator chsh_operator(const MeasurementSettings &settings) {
    const auto &[theta, A, a, B, b] = settings;
    Operator4 m = tensor(A, B) + tensor(A, b) + tensor(a, B) - tensor(a, b);
    return {settings, m};
}

double chsh_value(const BellOperator &bell, const TwoQubitState &state) {
    return expectation(bell.matrix, state);
}

double chsh_value(const MeasurementSettings &settings, const TwoQubitState &state) {
    return chsh_value(chsh_operator(settings), state);
}

CorrelationQuadruple correlation_quadruple(const MeasurementSettings &settings, const TwoQubitState &state) {
    const auto &[theta, A, a, B, b] = settings;
    return {{
        expectation(tensor(A, B), state),
        expectation(tensor(A, b), state),
        expectation(tensor(a, B), state),
        expectation(tensor(a, b), state),
    }};
}

}  // namespace chshb
