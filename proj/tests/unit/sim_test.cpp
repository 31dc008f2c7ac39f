// Copyright 2026 The qracsr Authors
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

#include "qracsr/sim.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "qracsr/constructions.hpp"
#include "test_support.hpp"

namespace qracsr {
namespace {

double four_sigma(double p, std::uint64_t trials) { return 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials)); }

TEST(Simulate, RandomizedQrac2IsFlat) {
    const SimReport r = simulate_code(known_code("qrac2"), 100000, 1, true);
    const double target = 0.5 + std::sqrt(2.0) / 4.0;
    ASSERT_EQ(r.per_input.size(), 8u);
    for (double f : r.per_input) EXPECT_NEAR(f, target, 0.006);
    EXPECT_TRUE(r.randomized);
    EXPECT_EQ(r.trials_per_input, 100000u);
}

TEST(Simulate, RandomizedSpreadIsSmall) {
    for (const char *name : {"qrac2", "qrac3", "qrac4", "qrac5", "qrac6"}) {
        const SimReport r = simulate_code(known_code(name), 100000, 2, true);
        EXPECT_LT(r.spread(), 0.01) << name;
        EXPECT_NEAR(r.average, evaluate(known_code(name)).average, 0.003) << name;
    }
}

TEST(Simulate, Qrac4WorstCaseIsHalfWithoutRandomization) {
    const QracCode code = known_code("qrac4");
    const CodeReport exact = evaluate(code);
    EXPECT_NEAR(exact.worst_case, 0.5, 1e-12);
    const std::uint64_t trials = 100000;
    const SimReport r = simulate_code(code, trials, 3, false);
    EXPECT_NEAR(r.worst_case, 0.5, four_sigma(0.5, trials) + 1e-3);
    // The empirical minimum sits on an input whose exact value is one half.
    std::size_t argmin = 0;
    for (std::size_t k = 0; k < r.per_input.size(); ++k) {
        if (r.per_input[k] < r.per_input[argmin]) argmin = k;
    }
    EXPECT_NEAR(exact.per_input[argmin], 0.5, 0.01);
}

TEST(Simulate, SingleMeasurementIsAlwaysRight) {
    const Measurement m{BlochVector::normalize({1, 2, 3})};
    const QracCode code({m}, {m.direction, m.direction.antipode()});
    for (bool randomize : {false, true}) {
        const SimReport r = simulate_code(code, 1000, 4, randomize);
        for (double f : r.per_input) EXPECT_EQ(f, 1.0);
        EXPECT_EQ(r.worst_case, 1.0);
    }
}

TEST(Simulate, AverageMatchesAnalyticValue) {
    for (const char *name : {"qrac2", "qrac3", "qrac5", "sym4", "sym6"}) {
        const QracCode code = known_code(name);
        const CodeReport exact = evaluate(code);
        const std::uint64_t trials = 20000;
        const SimReport r = simulate_code(code, trials, 5, false);
        // Slots are independent Bernoulli means; pooled standard error.
        double var = 0.0;
        for (double p : exact.per_input) var += p * (1.0 - p);
        const double slots = static_cast<double>(exact.per_input.size());
        const double sigma = std::sqrt(var / static_cast<double>(trials)) / slots;
        EXPECT_NEAR(r.average, exact.average, 4.0 * sigma) << name;
        for (std::size_t k = 0; k < r.per_input.size(); ++k) {
            EXPECT_GE(r.per_input[k], 0.0);
            EXPECT_LE(r.per_input[k], 1.0);
        }
    }
}

TEST(Simulate, DeterministicPerSeed) {
    const QracCode code = known_code("qrac3");
    const SimReport a = simulate_code(code, 5000, 42, true);
    const SimReport b = simulate_code(code, 5000, 42, true);
    const SimReport c = simulate_code(code, 5000, 43, true);
    EXPECT_EQ(a.per_input, b.per_input);
    EXPECT_NE(a.per_input, c.per_input);
    EXPECT_EQ(a.seed, 42u);
}

TEST(Simulate, RejectsZeroTrials) { EXPECT_THROW(simulate_code(known_code("qrac2"), 0, 1, false), std::invalid_argument); }

TEST(SampleMeasurement, Extremes) {
    testing::Pcg pcg(17);
    CounterRng rng(1, 0);
    for (int t = 0; t < 1000; ++t) {
        const Measurement m{pcg.bloch()};
        EXPECT_EQ(sample_measurement(m.direction, m, rng), 0);
        EXPECT_EQ(sample_measurement(m.direction.antipode(), m, rng), 1);
    }
}

TEST(SampleMeasurement, PerpendicularIsFair) {
    const Measurement m{BlochVector::from_unit({0, 0, 1})};
    const BlochVector state = BlochVector::from_unit({1, 0, 0});
    CounterRng rng(9, 0);
    int zeros = 0;
    const int draws = 1000000;
    for (int t = 0; t < draws; ++t) zeros += sample_measurement(state, m, rng) == 0;
    EXPECT_NEAR(static_cast<double>(zeros) / draws, 0.5, 0.002);
}

TEST(SampleMeasurement, StreamDeterministic) {
    const Measurement m{BlochVector::normalize({1, 1, 0})};
    const BlochVector state = BlochVector::normalize({0, 1, 1});
    CounterRng a(3, 7), b(3, 7);
    for (int t = 0; t < 1000; ++t) EXPECT_EQ(sample_measurement(state, m, a), sample_measurement(state, m, b));
}

TEST(CyclicShift, MovesBitsForward) {
    EXPECT_EQ(cyclic_shift(0b0001, 4, 1), 0b0010u);
    EXPECT_EQ(cyclic_shift(0b1000, 4, 1), 0b0001u);
    EXPECT_EQ(cyclic_shift(0b1011, 4, 0), 0b1011u);
    EXPECT_EQ(cyclic_shift(0b011, 3, 2), 0b101u);
    testing::Pcg pcg(19);
    for (int t = 0; t < 1000; ++t) {
        const int n = 1 + static_cast<int>(pcg.next32() % 20);
        const std::uint64_t x = pcg.next64() & ((std::uint64_t{1} << n) - 1);
        const int d = static_cast<int>(pcg.next32() % static_cast<std::uint32_t>(n));
        const std::uint64_t y = cyclic_shift(x, n, d);
        EXPECT_EQ(__builtin_popcountll(x), __builtin_popcountll(y));
        EXPECT_EQ(cyclic_shift(y, n, (n - d) % n), x);
        for (int j = 0; j < n; ++j) EXPECT_EQ((x >> j) & 1u, (y >> ((j + d) % n)) & 1u);
    }
}

TEST(SharedRandomness, UniformOverMasksAndShifts) {
    const int n = 3;
    CounterRng rng(11, 0);
    std::vector<int> masks(8, 0), shifts(3, 0);
    const int draws = 240000;
    for (int t = 0; t < draws; ++t) {
        const SharedRandomness s = draw_shared_randomness(n, rng);
        ASSERT_LT(s.mask, 8u);
        ASSERT_GE(s.shift, 0);
        ASSERT_LT(s.shift, n);
        ++masks[s.mask];
        ++shifts[static_cast<std::size_t>(s.shift)];
    }
    for (int c : masks) EXPECT_NEAR(c, draws / 8.0, 4.0 * std::sqrt(draws / 8.0 * 7.0 / 8.0));
    for (int c : shifts) EXPECT_NEAR(c, draws / 3.0, 4.0 * std::sqrt(draws / 3.0 * 2.0 / 3.0));
}

}  // namespace
}  // namespace qracsr
