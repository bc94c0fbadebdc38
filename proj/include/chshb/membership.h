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

#ifndef CHSHB_MEMBERSHIP_H
#define CHSHB_MEMBERSHIP_H

#include <array>
#include <string_view>

#include "chshb/linalg.h"
#include "chshb/observables.h"

namespace chshb {

/// Additive slack on every closed inequality test.
inline constexpr double kBoundaryTolerance = 1e-12;
/// Entries this far outside [-1, 1] are clamped; further out is an error.
inline constexpr double kClampTolerance = 1e-9;

/// Membership of a correlation quadruple, checked from the innermost set
/// outwards: local-realistic, quantum but nonlocal, inside Tsirelson's
/// necessary condition but not quantum, and outside it.
enum class RegionLabel { Classical, QuantumNonclassical, SuperquantumWithinTsirelson, BeyondTsirelson };

std::string_view region_name(RegionLabel label);

/// x_i + x_{i+1} + x_{i+2} - x_{i+3} (indices mod 4). Throws IndexOutOfRange.
double chsh_combination(const CorrelationQuadruple &q, int i);
/// The same cyclic combination of arcsin(x_k), after clamping. Throws IndexOutOfRange, EntryOutOfRange.
double arcsin_combination(const CorrelationQuadruple &q, int i);

/// Clamps entries into [-1, 1]. Throws EntryOutOfRange beyond kClampTolerance or on NaN.
CorrelationQuadruple clamp_quadruple(const CorrelationQuadruple &q);

/// All eight CHSH inequalities: |chsh_combination(q, i)| <= 2. Throws EntryOutOfRange.
bool is_classical(const CorrelationQuadruple &q);
/// |x_i| <= 1 and |chsh_combination(q, i)| <= 2 sqrt 2. Never throws.
bool satisfies_tsirelson(const CorrelationQuadruple &q);
/// All eight arcsin inequalities: |arcsin_combination(q, i)| <= pi. Throws EntryOutOfRange.
bool is_quantum_attainable(const CorrelationQuadruple &q);

/// Throws EntryOutOfRange.
RegionLabel classify(const CorrelationQuadruple &q);

/// CHSH-scale value l mapped to the CH scale, (l - 2) / 4.
double chsh_to_ch(double value);

/// Outcome order used by every distribution and count array: (+,+), (+,-), (-,+), (-,-).
using OutcomeDistribution = std::array<double, 4>;

/// Tr(rho Pi_I (x) Pi_II) with Pi = (I + out obs) / 2, clamped to [0, 1].
/// Throws NonHermitianOperator, InvalidArgument (outcome not +-1).
double joint_probability(const TwoQubitState &state, const Operator2 &obs_I, const Operator2 &obs_II, int out_I,
                         int out_II);

OutcomeDistribution outcome_distribution(const TwoQubitState &state, const Operator2 &obs_I,
                                         const Operator2 &obs_II);

/// P(A=1,B=1) - P(A=1,b=-1) + P(a=1,B=1) + P(a=1,b=-1) - P(a=1) - P(B=1).
double ch_value(const MeasurementSettings &settings, const TwoQubitState &state);

}  // namespace chshb

#endif
