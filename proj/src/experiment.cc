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

#include "chshb/experiment.h"

#include <algorithm>
#include <iterator>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "chshb/error.h"
#include "chshb/kernels.h"

namespace chshb {

namespace {

constexpr size_t kScanChunk = 4096;

// CH written as a linear functional of the four outcome distributions. Single
// probabilities P(a=1) and P(B=1) are the mean of the two marginals each
// count table provides, which makes the functional's expectation equal to the
// CH value and its sample value close to (CHSH_est - 2) / 4.
constexpr double kChCoefficients[kSettingPairs][4] = {
    {0.5, 0.0, -0.5, 0.0},   // (A,B): P(A+B+) - P(B+)/2
    {0.0, -1.0, 0.0, 0.0},   // (A,b): -P(A+b-)
    {0.0, -0.5, -0.5, 0.0},  // (a,B): P(a+B+) - P(a+)/2 - P(B+)/2
    {-0.5, 0.5, 0.0, 0.0},   // (a,b): P(a+b-) - P(a+)/2
};

struct SettingPair {
    const Operator2 *obs_I;
    const Operator2 *obs_II;
};

std::array<SettingPair, kSettingPairs> setting_pairs(const MeasurementSettings &s) {
    return {{{&s.A, &s.B}, {&s.A, &s.b}, {&s.a, &s.B}, {&s.a, &s.b}}};
}

void require_epsilon(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw ChshError(ErrorCode::EpsilonOutOfRange, "epsilon must lie in [0, 1], got " + std::to_string(epsilon));
    }
}

int64_t total(const OutcomeCounts &counts) {
    return counts[0] + counts[1] + counts[2] + counts[3];
}

}  // namespace

TwoQubitState werner_state(double epsilon) {
    require_epsilon(epsilon);
    Operator4 rho = (1.0 - epsilon) * singlet().density();
    rho += (epsilon / 4.0) * Operator4::identity();
    return TwoQubitState::mixed(rho);
}

TwoQubitState prepared_state(double theta, Branch branch, const NoiseModel &noise) {
    double xi = optimal_xi(theta, branch);
    return werner_state(noise.epsilon).apply_local_I(rotation_u(xi));
}

OutcomeCounts sample_setting(const TwoQubitState &state, const Operator2 &obs_I, const Operator2 &obs_II, int64_t n,
                             RngStream &rng) {
    if (n < 1) {
        throw ChshError(ErrorCode::InvalidArgument, "shot count must be >= 1, got " + std::to_string(n));
    }
    OutcomeDistribution p = outcome_distribution(state, obs_I, obs_II);
    double norm = p[0] + p[1] + p[2] + p[3];
    std::array<double, 3> cumulative{};
    double run = 0;
    for (size_t k = 0; k < 3; k++) {
        run += p[k] / norm;
        cumulative[k] = run;
    }
    size_t last_possible = 3;
    while (p[last_possible] == 0.0) {
        last_possible--;
    }
    OutcomeCounts counts{};
    for (int64_t shot = 0; shot < n; shot++) {
        double u = rng.uniform();
        size_t k = 0;
        while (k < 3 && u >= cumulative[k]) {
            k++;
        }
        if (p[k] == 0.0) {
            // Only reachable through rounding in the top bin.
            k = last_possible;
        }
        counts[k]++;
    }
    return counts;
}

CorrelationEstimate estimate_correlation(const OutcomeCounts &counts) {
    int64_t n = total(counts);
    if (n < 1) {
        throw ChshError(ErrorCode::EmptyCounts, "no shots recorded");
    }
    double value = static_cast<double>(counts[0] + counts[3] - counts[1] - counts[2]) / static_cast<double>(n);
    double std_error = (n == 1) ? 1.0 : std::sqrt(std::max(0.0, 1.0 - value * value) / static_cast<double>(n));
    return {value, std_error, n};
}

AggregateEstimate estimate_ch(const std::array<OutcomeCounts, kSettingPairs> &counts) {
    AggregateEstimate est;
    double variance = 0;
    for (int pair = 0; pair < kSettingPairs; pair++) {
        int64_t n = total(counts[pair]);
        if (n < 1) {
            throw ChshError(ErrorCode::EmptyCounts, "no shots recorded for setting pair " + std::to_string(pair));
        }
        double mean = 0;
        double second = 0;
        for (size_t k = 0; k < 4; k++) {
            double f = static_cast<double>(counts[pair][k]) / static_cast<double>(n);
            double c = kChCoefficients[pair][k];
            mean += c * f;
            second += c * c * f;
        }
        est.value += mean;
        if (n == 1) {
            auto [lo, hi] = std::minmax_element(std::begin(kChCoefficients[pair]), std::end(kChCoefficients[pair]));
            variance += 0.25 * (*hi - *lo) * (*hi - *lo);
            continue;
        }
        variance += std::max(0.0, second - mean * mean) / static_cast<double>(n);
    }
    est.std_error = std::sqrt(variance);
    return est;
}

ExperimentRecord run_point(double theta, Branch branch, const NoiseModel &noise, const ShotPlan &plan) {
    if (plan.shots_per_setting < 0) {
        throw ChshError(ErrorCode::InvalidArgument, "shots per setting must be >= 0");
    }
    MeasurementSettings settings = make_settings(theta);
    QuantumBound bound = quantum_bound(theta);
    TwoQubitState state = prepared_state(theta, branch, noise);

    ExperimentRecord record;
    record.theta = theta;
    record.branch = branch;
    record.xi = branch == Branch::Upper ? bound.xi_upper : bound.xi_lower;
    record.bound_upper = bound.upper;
    record.bound_lower = bound.lower;
    record.chsh_ideal = chsh_value(settings, state);
    record.ch_ideal = ch_value(settings, state);
    record.epsilon = noise.epsilon;

    if (plan.shots_per_setting == 0) {
        return record;
    }

    SampledStatistics stats;
    double chsh_variance = 0;
    auto pairs = setting_pairs(settings);
    for (int pair = 0; pair < kSettingPairs; pair++) {
        RngStream rng(plan.seed, plan.node_index * kSettingPairs + pair);
        stats.counts[pair] = sample_setting(state, *pairs[pair].obs_I, *pairs[pair].obs_II, plan.shots_per_setting, rng);
        stats.correlations[pair] = estimate_correlation(stats.counts[pair]);
        double sign = (pair == 3) ? -1.0 : 1.0;
        stats.chsh.value += sign * stats.correlations[pair].value;
        chsh_variance += stats.correlations[pair].std_error * stats.correlations[pair].std_error;
    }
    stats.chsh.std_error = std::sqrt(chsh_variance);
    stats.ch = estimate_ch(stats.counts);
    record.sampled = stats;
    return record;
}

std::vector<double> theta_grid(int n_points) {
    if (n_points < 2) {
        throw ChshError(ErrorCode::InvalidArgument, "a theta grid needs at least 2 points");
    }
    std::vector<double> grid(n_points);
    for (int k = 0; k < n_points; k++) {
        grid[k] = (k == n_points - 1) ? std::numbers::pi : std::numbers::pi * k / (n_points - 1);
    }
    return grid;
}

std::vector<ExperimentRecord> trace_bound(int n_points, Branch branch, const NoiseModel &noise,
                                          const ShotPlan &plan) {
    std::vector<double> grid = theta_grid(n_points);
    std::vector<ExperimentRecord> records;
    records.reserve(grid.size());
    for (size_t k = 0; k < grid.size(); k++) {
        ShotPlan node_plan = plan;
        node_plan.node_index = k;
        records.push_back(run_point(grid[k], branch, noise, node_plan));
    }
    return records;
}

ScanResult random_scan(double theta, int64_t n_states, StateMix mix, RngStream &rng) {
    if (n_states < 1) {
        throw ChshError(ErrorCode::InvalidArgument, "scan needs at least one state");
    }
    BellOperator bell = chsh_operator(make_settings(theta));
    PackedHermitian4 packed = PackedHermitian4::from(bell.matrix);

    ScanResult result{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(), n_states};
    auto observe = [&result](double v) {
        result.min = std::min(result.min, v);
        result.max = std::max(result.max, v);
    };

    AmplitudeBatch batch(kScanChunk);
    std::vector<double> values;
    auto flush = [&]() {
        values.resize(batch.size());
        quadratic_forms(packed, batch, values);
        for (double v : values) {
            observe(v);
        }
        batch.clear();
    };

    int64_t mixed_drawn = 0;
    for (int64_t k = 0; k < n_states; k++) {
        bool draw_pure = mix == StateMix::Pure || (mix == StateMix::Both && k % 2 == 0);
        if (draw_pure) {
            batch.push_back(haar_random_pure(rng).amplitudes());
            if (batch.size() == kScanChunk) {
                flush();
            }
        } else {
            int rank = static_cast<int>(mixed_drawn++ % 4) + 1;
            observe(chsh_value(bell, random_density(rank, rng)));
        }
    }
    if (batch.size() > 0) {
        flush();
    }
    return result;
}

}  // namespace chshb
