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

#ifndef CHSHB_OBSERVABLES_H
#define CHSHB_OBSERVABLES_H

#include <array>

#include "chshb/linalg.h"

namespace chshb {

/// Correlations (<AB>, <Ab>, <aB>, <ab>) in that order.
struct CorrelationQuadruple {
    std::array<double, 4> x{};

    double &operator[](size_t i) {
        return x[i];
    }
    double operator[](size_t i) const {
        return x[i];
    }
};

/// One member of the one-parameter family of local spin observables in the
/// z-x plane. Party I measures A (angle 2 theta) or a (sigma_z); party II
/// measures B (angle theta) or b (angle 3 theta). Angles are Bloch-sphere
/// angles from the z axis.
struct MeasurementSettings {
    double theta = 0;
    Operator2 A;
    Operator2 a;
    Operator2 B;
    Operator2 b;
};

/// cos(angle) sigma_z + sin(angle) sigma_x.
Operator2 spin_along(double angle);

/// Throws ThetaOutOfRange unless 0 <= theta <= pi. No wrapping.
MeasurementSettings make_settings(double theta);

struct BellOperator {
    MeasurementSettings settings;
    /// A(x)B + A(x)b + a(x)B - a(x)b
    Operator4 matrix;
};

BellOperator chsh_operator(const MeasurementSettings &settings);

double chsh_value(const MeasurementSettings &settings, const TwoQubitState &state);
double chsh_value(const BellOperator &bell, const TwoQubitState &state);

CorrelationQuadruple correlation_quadruple(const MeasurementSettings &settings, const TwoQubitState &state);

}  // namespace chshb

#endif
