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

#include "chshb/membership.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "chshb/error.h"

namespace chshb {

namespace {

const double kTsirelson = 2.0 * std::sqrt(2.0);

void require_index(int i) {
    if (i < 0 || i > 3) {
        throw ChshError(ErrorCode::IndexOutOfRange, "combination index must be in 0..3, got " + std::to_string(i));
    }
}

template <typename F>
double cyclic_combination(const CorrelationQuadruple &q, int i, F f) {
    return f(q[i % 4]) + f(q[(i + 1) % 4]) + f(q[(i + 2) % 4]) - f(q[(i + 3) % 4]);
}

bool all_combinations_within(const std::array<double, 4> &combinations, double bound) {
    for (double c : combinations) {
        if (std::abs(c) > bound + kBoundaryTolerance) {
            return false;
        }
    }
    return true;
}

Operator2 projector(const Operator2 &obs, int outcome) {
    if (outcome != 1 && outcome != -1) {
        throw ChshError(ErrorCode::InvalidArgument, "outcome must be +1 or -1, got " + std::to_string(outcome));
    }
    if (!obs.is_hermitian()) {
        throw ChshError(ErrorCode::NonHermitianOperator, "local observable is not Hermitian within 1e-12");
    }
    Operator2 p = Operator2::identity() + static_cast<double>(outcome) * obs;
    p *= 0.5;
    return p;
}

double clamp_probability(double p) {
    return std::clamp(p, 0.0, 1.0);
}

}  // namespace

std::string_view region_name(RegionLabel label) {
    switch (label) {
        case RegionLabel::Classical:
            return "Classical";
        case RegionLabel::QuantumNonclassical:
            return "QuantumNonclassical";
        case RegionLabel::SuperquantumWithinTsirelson:
            return "SuperquantumWithinTsirelson";
        case RegionLabel::BeyondTsirelson:
            return "BeyondTsirelson";
    }
    return "Unknown";
}

double chsh_combination(const CorrelationQuadruple &q, int i) {
    require_index(i);
    return cyclic_combination(q, i, [](double v) { return v; });
}

double arcsin_combination(const CorrelationQuadruple &q, int i) {
    require_index(i);
    CorrelationQuadruple c = clamp_quadruple(q);
    return cyclic_combination(c, i, [](double v) { return std::asin(v); });
}

CorrelationQuadruple clamp_quadruple(const CorrelationQuadruple &q) {
    CorrelationQuadruple out;
    for (size_t k = 0; k < 4; k++) {
        double v = q[k];
        if (!(std::abs(v) <= 1.0 + kClampTolerance)) {
            throw ChshError(ErrorCode::EntryOutOfRange,
                            "correlation x" + std::to_string(k) + " = " + std::to_string(v) + " outside [-1, 1]");
        }
        out[k] = std::clamp(v, -1.0, 1.0);
    }
    return out;
}

bool is_classical(const CorrelationQuadruple &q) {
    CorrelationQuadruple c = clamp_quadruple(q);
    std::array<double, 4> combos{};
    for (int i = 0; i < 4; i++) {
        combos[i] = chsh_combination(c, i);
    }
    return all_combinations_within(combos, 2.0);
}

bool satisfies_tsirelson(const CorrelationQuadruple &q) {
    for (double v : q.x) {
        if (!(std::abs(v) <= 1.0 + kBoundaryTolerance)) {
            return false;
        }
    }
    std::array<double, 4> combos{};
    for (int i = 0; i < 4; i++) {
        combos[i] = chsh_combination(q, i);
    }
    return all_combinations_within(combos, kTsirelson);
}

bool is_quantum_attainable(const CorrelationQuadruple &q) {
    std::array<double, 4> combos{};
    for (int i = 0; i < 4; i++) {
        combos[i] = arcsin_combination(q, i);
    }
    return all_combinations_within(combos, std::numbers::pi);
}

RegionLabel classify(const CorrelationQuadruple &q) {
    if (is_classical(q)) {
        return RegionLabel::Classical;
    }
    if (is_quantum_attainable(q)) {
        return RegionLabel::QuantumNonclassical;
    }
    if (satisfies_tsirelson(q)) {
        return RegionLabel::SuperquantumWithinTsirelson;
    }
    return RegionLabel::BeyondTsirelson;
}

double chsh_to_ch(double value) {
    return (value - 2.0) / 4.0;
}

double joint_probability(const TwoQubitState &state, const Operator2 &obs_I, const Operator2 &obs_II, int out_I,
                         int out_II) {
    Operator4 pi = tensor(projector(obs_I, out_I), projector(obs_II, out_II));
    return clamp_probability(expectation(pi, state));
}

OutcomeDistribution outcome_distribution(const TwoQubitState &state, const Operator2 &obs_I,
                                         const Operator2 &obs_II) {
    return {
        joint_probability(state, obs_I, obs_II, +1, +1),
        joint_probability(state, obs_I, obs_II, +1, -1),
        joint_probability(state, obs_I, obs_II, -1, +1),
        joint_probability(state, obs_I, obs_II, -1, -1),
    };
}

double ch_value(const MeasurementSettings &settings, const TwoQubitState &state) {
    const auto &[theta, A, a, B, b] = settings;
    Operator2 id = Operator2::identity();
    double p_a = clamp_probability(expectation(tensor(projector(a, +1), id), state));
    double p_B = clamp_probability(expectation(tensor(id, projector(B, +1)), state));
    return joint_probability(state, A, B, +1, +1) - joint_probability(state, A, b, +1, -1) +
           joint_probability(state, a, B, +1, +1) + joint_probability(state, a, b, +1, -1) - p_a - p_B;
}

}  // namespace chshb
