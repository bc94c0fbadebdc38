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

#include <cmath>
#include <numbers>
#include <random>

#include "chshb/error.h"
#include "gtest/gtest.h"

using namespace chshb;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

ErrorCode code_of(auto &&f) {
    try {
        f();
    } catch (const ChshError &e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(werner_state, endpoints_and_errors) {
    ASSERT_LT(werner_state(0.0).density().max_abs_diff(singlet().density()), 1e-15);
    Operator4 quarter = Operator4::identity();
    quarter *= 0.25;
    ASSERT_LT(werner_state(1.0).density().max_abs_diff(quarter), 1e-15);
    ASSERT_EQ(code_of([] { werner_state(-0.1); }), ErrorCode::EpsilonOutOfRange);
    ASSERT_EQ(code_of([] { werner_state(1.5); }), ErrorCode::EpsilonOutOfRange);
    ASSERT_NEAR(chsh_value(make_settings(kPi / 4), werner_state(0.1)), -0.9 * 2 * kSqrt2, 1e-12);
}

TEST(prepared_state, noiseless_quarter_pi_is_phi_plus) {
    Operator4 rho = prepared_state(kPi / 4, Branch::Upper, NoiseModel{0.0}).density();
    ASSERT_LT(rho.max_abs_diff(phi_plus().density()), 1e-12);
}

TEST(prepared_state, attains_bound_and_shrinks_linearly_with_noise) {
    for (double theta : theta_grid(181)) {
        MeasurementSettings s = make_settings(theta);
        QuantumBound b = quantum_bound(theta);
        double clean = chsh_value(s, prepared_state(theta, Branch::Upper, NoiseModel{0.0}));
        ASSERT_NEAR(clean, b.upper, 1e-9);
        ASSERT_NEAR(chsh_value(s, prepared_state(theta, Branch::Lower, NoiseModel{0.0})), b.lower, 1e-9);
        for (double eps : {0.01, 0.1, 0.5}) {
            double noisy = chsh_value(s, prepared_state(theta, Branch::Upper, NoiseModel{eps}));
            ASSERT_NEAR(noisy, (1 - eps) * clean, 1e-10);
        }
    }
    ASSERT_NEAR(chsh_value(make_settings(kPi / 4), prepared_state(kPi / 4, Branch::Upper, NoiseModel{0.1})),
                0.9 * 2 * kSqrt2, 1e-10);
}

TEST(sample_setting, impossible_outcomes_never_drawn) {
    Operator2 z = pauli(PauliAxis::Z);
    RngStream rng(1, 0);
    OutcomeCounts c = sample_setting(singlet(), z, z, 10000, rng);
    ASSERT_EQ(c[0], 0);
    ASSERT_EQ(c[3], 0);
    ASSERT_EQ(c[1] + c[2], 10000);
    OutcomeCounts d = sample_setting(phi_plus(), z, z, 10000, rng);
    ASSERT_EQ(estimate_correlation(d).value, 1.0);
}

TEST(sample_setting, reproducible_and_validated) {
    MeasurementSettings s = make_settings(0.4);
    TwoQubitState state = prepared_state(0.4, Branch::Upper, NoiseModel{0.05});
    RngStream a(9, 3);
    RngStream b(9, 3);
    ASSERT_EQ(sample_setting(state, s.A, s.B, 5000, a), sample_setting(state, s.A, s.B, 5000, b));
    ASSERT_EQ(code_of([&] { sample_setting(state, s.A, s.B, 0, a); }), ErrorCode::InvalidArgument);
}

TEST(sample_setting, frequencies_match_probabilities) {
    MeasurementSettings s = make_settings(1.1);
    TwoQubitState state = prepared_state(1.1, Branch::Upper, NoiseModel{0.2});
    OutcomeDistribution p = outcome_distribution(state, s.a, s.b);
    constexpr int64_t n = 400000;
    RngStream rng(10, 0);
    OutcomeCounts c = sample_setting(state, s.a, s.b, n, rng);
    for (size_t k = 0; k < 4; k++) {
        double sd = std::sqrt(p[k] * (1 - p[k]) / n);
        ASSERT_NEAR(static_cast<double>(c[k]) / n, p[k], 5 * sd + 1e-12) << k;
    }
}

TEST(estimate_correlation, examples) {
    CorrelationEstimate a = estimate_correlation({5000, 0, 0, 5000});
    ASSERT_EQ(a.value, 1.0);
    ASSERT_EQ(a.std_error, 0.0);
    ASSERT_EQ(a.n, 10000);
    CorrelationEstimate b = estimate_correlation({2500, 2500, 2500, 2500});
    ASSERT_EQ(b.value, 0.0);
    ASSERT_NEAR(b.std_error, 0.01, 1e-15);
    ASSERT_EQ(estimate_correlation({0, 5000, 5000, 0}).value, -1.0);
    ASSERT_EQ(estimate_correlation({1, 0, 0, 0}).std_error, 1.0);
    ASSERT_EQ(code_of([] { estimate_correlation({0, 0, 0, 0}); }), ErrorCode::EmptyCounts);
}

TEST(estimate_ch, expectation_equals_ch_value) {
    // Counts proportional to the exact distributions, so the estimator returns
    // its expectation up to rounding.
    constexpr double scale = 1e15;
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(0.0, kPi);
    RngStream rng(3, 0);
    for (int trial = 0; trial < 200; trial++) {
        MeasurementSettings s = make_settings(u(gen));
        TwoQubitState state = (trial % 2) ? haar_random_pure(rng) : random_density(1 + trial % 4, rng);
        std::array<OutcomeCounts, kSettingPairs> counts{};
        const Operator2 *obs[4][2] = {{&s.A, &s.B}, {&s.A, &s.b}, {&s.a, &s.B}, {&s.a, &s.b}};
        for (int pair = 0; pair < 4; pair++) {
            OutcomeDistribution p = outcome_distribution(state, *obs[pair][0], *obs[pair][1]);
            for (size_t k = 0; k < 4; k++) {
                counts[pair][k] = static_cast<int64_t>(std::llround(p[k] * scale));
            }
        }
        ASSERT_NEAR(estimate_ch(counts).value, ch_value(s, state), 1e-9);
    }
}

TEST(run_point, deterministic_outcomes_at_theta_zero) {
    for (int64_t shots : {1, 7, 1000}) {
        ExperimentRecord r = run_point(0.0, Branch::Upper, NoiseModel{0.0}, ShotPlan{shots, 5, 0});
        ASSERT_TRUE(r.sampled.has_value());
        ASSERT_EQ(r.sampled->chsh.value, 2.0);
        // Correlations are deterministic; the marginals entering CH are not.
        ASSERT_LE(std::abs(r.sampled->ch.value), 5 * r.sampled->ch.std_error + 1e-12);
    }
}

TEST(run_point, quarter_pi_million_shots) {
    ExperimentRecord r = run_point(kPi / 4, Branch::Upper, NoiseModel{0.0}, ShotPlan{1000000, 17, 0});
    const SampledStatistics &s = *r.sampled;
    ASSERT_NEAR(r.chsh_ideal, 2 * kSqrt2, 1e-9);
    ASSERT_NEAR(s.chsh.value, 2 * kSqrt2, 5 * s.chsh.std_error);
    ASSERT_NEAR(s.ch.value, (kSqrt2 - 1) / 2, 5 * s.ch.std_error);
    ASSERT_NEAR(s.ch.value, chsh_to_ch(s.chsh.value), 5 * s.ch.std_error);
    ASSERT_NEAR(s.chsh.std_error, std::sqrt(4 * 0.5 / 1e6), 1e-4);
    for (const auto &c : s.correlations) {
        ASSERT_EQ(c.n, 1000000);
    }
}

TEST(run_point, analytic_only_without_shots) {
    ExperimentRecord r = run_point(1.0, Branch::Lower, NoiseModel{0.1}, ShotPlan{0, 1, 0});
    ASSERT_FALSE(r.sampled.has_value());
    ASSERT_NEAR(r.chsh_ideal, 0.9 * r.bound_lower, 1e-10);
    ASSERT_NEAR(r.ch_ideal, chsh_to_ch(r.chsh_ideal), 1e-10);
}

TEST(trace_bound, endpoints_only_for_two_points) {
    auto records = trace_bound(2, Branch::Upper, NoiseModel{0.0}, ShotPlan{});
    ASSERT_EQ(records.size(), 2u);
    ASSERT_EQ(records[0].theta, 0.0);
    ASSERT_EQ(records[1].theta, kPi);
    ASSERT_NEAR(records[0].bound_upper, 2.0, 1e-12);
    ASSERT_NEAR(records[1].bound_upper, 2.0, 1e-12);
    ASSERT_EQ(code_of([] { trace_bound(1, Branch::Upper, NoiseModel{}, ShotPlan{}); }), ErrorCode::InvalidArgument);
}

TEST(trace_bound, werner_shrinkage_is_uniform) {
    auto records = trace_bound(181, Branch::Upper, NoiseModel{0.05}, ShotPlan{});
    double worst = 0;
    for (const auto &r : records) {
        double shrink = (r.bound_upper - r.chsh_ideal) / r.bound_upper;
        ASSERT_NEAR(shrink, 0.05, 1e-9);
        worst = std::max(worst, shrink);
        ASSERT_LE(r.chsh_ideal, r.bound_upper + 1e-9);
    }
    ASSERT_NEAR(worst, 0.05, 1e-9);
}

TEST(trace_bound, sampled_grid_tracks_bound_and_is_reproducible) {
    auto a = trace_bound(181, Branch::Upper, NoiseModel{0.0}, ShotPlan{100000, 123, 0});
    auto b = trace_bound(181, Branch::Upper, NoiseModel{0.0}, ShotPlan{100000, 123, 0});
    for (size_t k = 0; k < a.size(); k++) {
        const auto &s = *a[k].sampled;
        ASSERT_NEAR(s.chsh.value, a[k].bound_upper, 5 * s.chsh.std_error + 1e-12) << a[k].theta;
        ASSERT_EQ(s.counts, b[k].sampled->counts);
    }
}

TEST(run_point, propagated_error_matches_empirical_spread) {
    constexpr int reps = 100;
    double sum = 0;
    double sum2 = 0;
    double reported = 0;
    for (int rep = 0; rep < reps; rep++) {
        ExperimentRecord r = run_point(0.6, Branch::Upper, NoiseModel{0.1}, ShotPlan{10000, 1000 + uint64_t(rep), 0});
        sum += r.sampled->chsh.value;
        sum2 += r.sampled->chsh.value * r.sampled->chsh.value;
        reported += r.sampled->chsh.std_error;
    }
    double mean = sum / reps;
    double empirical = std::sqrt((sum2 / reps - mean * mean) * reps / (reps - 1));
    double ratio = empirical / (reported / reps);
    ASSERT_GT(ratio, 1 / 1.5);
    ASSERT_LT(ratio, 1.5);
}

TEST(random_scan, never_exceeds_bound) {
    for (double theta : theta_grid(19)) {
        QuantumBound b = quantum_bound(theta);
        for (StateMix mix : {StateMix::Pure, StateMix::Mixed, StateMix::Both}) {
            RngStream rng(7, 0);
            ScanResult r = random_scan(theta, 3000, mix, rng);
            ASSERT_LE(r.max, b.upper + 1e-9);
            ASSERT_GE(r.min, b.lower - 1e-9);
            ASSERT_LE(r.min, r.max);
        }
    }
}

TEST(random_scan, quarter_pi_pure_scan_approaches_tsirelson) {
    RngStream rng(1, 0);
    ScanResult r = random_scan(kPi / 4, 100000, StateMix::Pure, rng);
    ASSERT_LE(r.max, 2 * kSqrt2 + 1e-9);
    // Haar sampling closes the gap only as N^(-1/3); at 1e5 states a gap of
    // 0.25 has probability around 1e-15.
    ASSERT_GE(r.max, 2 * kSqrt2 - 0.25);
}

TEST(random_scan, theta_zero_and_single_state) {
    RngStream rng(2, 0);
    ASSERT_LE(random_scan(0.0, 10000, StateMix::Pure, rng).max, 2.0 + 1e-9);
    ScanResult one = random_scan(0.3, 1, StateMix::Both, rng);
    ASSERT_EQ(one.min, one.max);
    ASSERT_EQ(code_of([&] { random_scan(0.3, 0, StateMix::Pure, rng); }), ErrorCode::InvalidArgument);
}
