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

#ifndef CHSHB_EXPERIMENT_H
#define CHSHB_EXPERIMENT_H

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "chshb/bounds.h"
#include "chshb/linalg.h"
#include "chshb/membership.h"
#include "chshb/observables.h"
#include "chshb/rng.h"

namespace chshb {

/// White-noise admixture of the singlet source.
struct NoiseModel {
    double epsilon = 0;
};

/// Sampling configuration for one grid node.
///
/// shots_per_setting == 0 selects analytic-only records. Every (node,
/// setting pair) draws from stream node_index * 4 + pair_index of seed.
struct ShotPlan {
    int64_t shots_per_setting = 0;
    uint64_t seed = 0;
    uint64_t node_index = 0;
};

/// Outcome counts in OutcomeDistribution order: (+,+), (+,-), (-,+), (-,-).
using OutcomeCounts = std::array<int64_t, 4>;

struct CorrelationEstimate {
    double value = 0;
    double std_error = 0;
    int64_t n = 0;
};

/// A derived estimate (CHSH or CH) with its propagated standard error.
struct AggregateEstimate {
    double value = 0;
    double std_error = 0;
};

/// Setting pairs in measurement order: (A,B), (A,b), (a,B), (a,b).
inline constexpr int kSettingPairs = 4;

struct SampledStatistics {
    std::array<OutcomeCounts, kSettingPairs> counts{};
    std::array<CorrelationEstimate, kSettingPairs> correlations{};
    AggregateEstimate chsh;
    AggregateEstimate ch;
};

struct ExperimentRecord {
    double theta = 0;
    Branch branch = Branch::Upper;
    double xi = 0;
    double bound_upper = 0;
    double bound_lower = 0;
    double chsh_ideal = 0;
    double ch_ideal = 0;
    double epsilon = 0;
    std::optional<SampledStatistics> sampled;
};

/// (1 - epsilon) |psi-><psi-| + epsilon I / 4. Throws EpsilonOutOfRange.
TwoQubitState werner_state(double epsilon);

/// The noisy singlet source followed by U(xi) on qubit I, xi = optimal_xi(theta, branch).
TwoQubitState prepared_state(double theta, Branch branch, const NoiseModel &noise);

/// n independent joint measurements of (obs_I, obs_II). Throws InvalidArgument if n < 1.
OutcomeCounts sample_setting(const TwoQubitState &state, const Operator2 &obs_I, const Operator2 &obs_II, int64_t n,
                             RngStream &rng);

/// Mean of the +-1 product and its standard error sqrt((1 - v^2) / n); the
/// error is 1 for a single shot. Throws EmptyCounts.
CorrelationEstimate estimate_correlation(const OutcomeCounts &counts);

/// CH value estimated from the same four count tables as the CHSH estimate,
/// with its plug-in multinomial standard error. A table holding a single shot
/// contributes the worst-case variance of its coefficients. Throws EmptyCounts.
AggregateEstimate estimate_ch(const std::array<OutcomeCounts, kSettingPairs> &counts);

/// One Bell test at theta: analytic columns always, sampled columns when
/// plan.shots_per_setting > 0.
ExperimentRecord run_point(double theta, Branch branch, const NoiseModel &noise, const ShotPlan &plan);

/// theta_k = k pi / (n_points - 1), k = 0..n_points-1, endpoints exact.
/// Throws InvalidArgument if n_points < 2.
std::vector<double> theta_grid(int n_points);

/// run_point on every theta_grid node, node k using node_index k.
std::vector<ExperimentRecord> trace_bound(int n_points, Branch branch, const NoiseModel &noise,
                                          const ShotPlan &plan);

enum class StateMix { Pure, Mixed, Both };

struct ScanResult {
    double min = 0;
    double max = 0;
    int64_t n_states = 0;
};

/// Extremes of the CHSH value at theta over n_states random states. Mixed
/// states cycle through ranks 1..4; Both alternates pure and mixed draws.
/// Throws InvalidArgument if n_states < 1.
ScanResult random_scan(double theta, int64_t n_states, StateMix mix, RngStream &rng);

}  // namespace chshb

#endif
