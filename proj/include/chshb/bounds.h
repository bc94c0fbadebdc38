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

#ifndef CHSHB_BOUNDS_H
#define CHSHB_BOUNDS_H

#include "chshb/linalg.h"

namespace chshb {

enum class Branch { Upper, Lower };

/// Extremal CHSH values reachable by any two-qubit state for the settings at
/// theta, and the frontier-state angles that reach them.
struct QuantumBound {
    double theta = 0;
    double upper = 0;
    double lower = 0;
    double xi_upper = 0;
    double xi_lower = 0;
};

/// +1 on [0, pi/2), -1 on [pi/2, pi].
double branch_sign(double theta);

/// Closed-form bound. Throws ThetaOutOfRange.
QuantumBound quantum_bound(double theta);

/// Frontier angle in [0, 2 pi) attaining the upper or lower bound.
/// Throws ThetaOutOfRange.
double optimal_xi(double theta, Branch branch);

/// Maps any angle into [0, 2 pi).
double normalize_angle(double xi);

TwoQubitState singlet();
TwoQubitState phi_plus();

/// cos(xi) |phi+> + sin(xi) |psi->
TwoQubitState frontier_state(double xi);

/// [[sin xi, -cos xi], [cos xi, sin xi]]
Operator2 rotation_u(double xi);

/// (U(xi) (x) I) |psi->
TwoQubitState prepare_from_singlet(double xi);

}  // namespace chshb

#endif
