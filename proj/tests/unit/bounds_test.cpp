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

#include "qracsr/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "qracsr/errors.hpp"
#include "qracsr/qrac.hpp"

namespace qracsr {
namespace {

// Closed forms of the axis construction for n = 2..9.
double axis_closed_form(int n) {
    const auto r = [](double v) { return std::sqrt(v); };
    switch (n) {
        case 2: return 0.5 + 1 / (2 * r(2));
        case 3: return 0.5 + 1 / (2 * r(3));
        case 4: return 0.5 + (1 + r(3)) / (8 * r(2));
        case 5: return 0.5 + (2 + r(5)) / 20;
        case 6: return 0.5 + (1 + r(3) + r(6)) / (16 * r(3));
        case 7: return 0.5 + (15 + 6 * r(5) + 2 * r(13) + r(17)) / 224;
        case 8: return 0.5 + (12 + 9 * r(3) + 6 * r(5) + 6 * r(7) + r(11)) / (256 * r(2));
        case 9: return 0.5 + (10 * r(3) + 9 * r(11) + 3 * r(19)) / 384;
        default: return 0;
    }
}

// Oracle: mean of ||sum of signed axis steps|| by enumerating all 2^n signs.
double enumerate_axis_walk(int x, int y, int z) {
    const int n = x + y + z;
    double total = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        double c[3] = {0, 0, 0};
        for (int i = 0; i < n; ++i) {
            const int a = i < x ? 0 : (i < x + y ? 1 : 2);
            c[a] += ((s >> i) & 1u) ? -1.0 : 1.0;
        }
        total += std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
    }
    return total / std::ldexp(1.0, n);
}

// Oracle: E||v1 + v2|| by Simpson quadrature over the angle g between the
// two directions, whose density is sin(g)/2 on [0, pi].
double two_step_quadrature() {
    const int steps = 4000;
    const double h = std::numbers::pi / steps;
    double acc = 0;
    for (int k = 0; k <= steps; ++k) {
        const double g = k * h;
        const double f = std::sqrt(2 + 2 * std::cos(g)) * std::sin(g) / 2;
        acc += f * (k == 0 || k == steps ? 1 : (k % 2 ? 4 : 2));
    }
    return acc * h / 3;
}

TEST(RandomWalkMc, SingleStepIsExact) {
    const WalkEstimate w = random_walk_distance_mc(1, 1000, 3);
    EXPECT_EQ(w.mean_distance, 1.0);
    EXPECT_EQ(w.std_error, 0.0);
    EXPECT_EQ(w.trials, 1000u);
}

TEST(RandomWalkMc, TwoStepsMatchQuadratureAndTable) {
    const double exact = two_step_quadrature();
    EXPECT_NEAR(exact, 4.0 / 3.0, 1e-9);
    const WalkEstimate w = random_walk_distance_mc(2, 1000000, 1);
    EXPECT_LT(std::abs(w.mean_distance - exact), 4 * w.std_error);
    EXPECT_NEAR(walk_probability(2, w.mean_distance), 0.8333, 0.001);
}

TEST(RandomWalkMc, MatchesSamplingColumn) {
    // Published four-decimal values; the 5e-5 term is their rounding.
    const double published[] = {0.8333, 0.7708, 0.7333, 0.7082, 0.6897, 0.6754, 0.6638, 0.6544};
    for (int n = 2; n <= 9; ++n) {
        const WalkEstimate w = random_walk_distance_mc(n, 1000000, 1);
        const double p = walk_probability(n, w.mean_distance);
        const double sigma = w.std_error / (2.0 * n);
        EXPECT_LT(std::abs(p - published[n - 2]), 4 * sigma + 5e-5) << "n=" << n;
    }
}

TEST(RandomWalkMc, DeterministicAndValidated) {
    const WalkEstimate a = random_walk_distance_mc(5, 200000, 42);
    const WalkEstimate b = random_walk_distance_mc(5, 200000, 42);
    EXPECT_EQ(a.mean_distance, b.mean_distance);
    EXPECT_EQ(a.std_error, b.std_error);
    EXPECT_NE(a.mean_distance, random_walk_distance_mc(5, 200000, 43).mean_distance);
    EXPECT_THROW(random_walk_distance_mc(2, 0, 1), std::invalid_argument);
    EXPECT_THROW(random_walk_distance_mc(0, 10, 1), std::invalid_argument);
}

TEST(AsymptoticBound, TableValues) {
    const double column[] = {0.825735, 0.765962, 0.730329, 0.706013, 0.688063, 0.674113, 0.662868, 0.653553};
    for (int n = 2; n <= 9; ++n) {
        EXPECT_NEAR(random_lower_bound_asymptotic(n).probability, column[n - 2], 1e-6) << "n=" << n;
    }
    EXPECT_TRUE(random_lower_bound_asymptotic(3).small_n_caveat);
    EXPECT_FALSE(random_lower_bound_asymptotic(4).small_n_caveat);
}

TEST(LatticeWalk, Examples) {
    EXPECT_NEAR(lattice_walk_distance(1, 1, 0), std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(lattice_walk_distance(1, 0, 0), 1.0, 1e-15);
    const double p4 = walk_probability(4, lattice_walk_distance(1, 1, 2));
    EXPECT_NEAR(p4, 0.5 + (1 + std::sqrt(3.0)) / (8 * std::sqrt(2.0)), 1e-12);
    EXPECT_NEAR(p4, 0.741481, 1e-6);
    EXPECT_THROW(lattice_walk_distance(0, 0, 0), std::invalid_argument);
    EXPECT_THROW(lattice_walk_distance(-1, 2, 0), std::invalid_argument);
    EXPECT_THROW(lattice_walk_distance(30, 30, 1), CostGuardError);
    EXPECT_NO_THROW(lattice_walk_distance(20, 20, 20));
}

TEST(LatticeWalk, MatchesSignEnumeration) {
    for (int n = 1; n <= 12; ++n) {
        for (int x = 0; x <= n; ++x) {
            for (int y = 0; x + y <= n; ++y) {
                const int z = n - x - y;
                ASSERT_NEAR(lattice_walk_distance(x, y, z), enumerate_axis_walk(x, y, z), 1e-10)
                    << x << "," << y << "," << z;
            }
        }
    }
}

TEST(LatticeWalk, MatchesDirectSValue) {
    for (int n = 1; n <= 10; ++n) {
        const OrthogonalBound b = orthogonal_lower_bound(n);
        const auto ms = axis_measurements(b.partition);
        ASSERT_EQ(static_cast<int>(ms.size()), n);
        EXPECT_NEAR(b.probability, evaluate(make_optimal_code(ms)).average, 1e-12);
    }
}

TEST(OrthogonalBound, TableClosedForms) {
    for (int n = 2; n <= 9; ++n) {
        EXPECT_NEAR(orthogonal_lower_bound(n).probability, axis_closed_form(n), 1e-9) << "n=" << n;
    }
    EXPECT_NEAR(orthogonal_lower_bound(4).probability, 0.741481, 1e-6);
    EXPECT_NEAR(orthogonal_lower_bound(5).probability, 0.711803, 1e-6);
    EXPECT_NEAR(orthogonal_lower_bound(6).probability, 0.686973, 1e-6);
    EXPECT_EQ(orthogonal_lower_bound(6).partition, (AxisPartition{2, 2, 2}));
    EXPECT_EQ(orthogonal_lower_bound(4).partition, (AxisPartition{2, 1, 1}));
    EXPECT_NEAR(orthogonal_lower_bound(7).probability, 0.677458, 1e-6);
    EXPECT_NEAR(orthogonal_lower_bound(8).probability, 0.666270, 1e-6);
    EXPECT_NEAR(orthogonal_lower_bound(9).probability, 0.656893, 1e-6);
    EXPECT_DOUBLE_EQ(orthogonal_lower_bound(1).probability, 1.0);
    EXPECT_THROW(orthogonal_lower_bound(0), std::invalid_argument);
    EXPECT_THROW(orthogonal_lower_bound(61), CostGuardError);
}

TEST(OrthogonalBound, SignPatternAgainstAsymptoticFormula) {
    for (int n = 2; n <= 30; ++n) {
        const bool above = orthogonal_lower_bound(n).probability >= random_lower_bound_asymptotic(n).probability;
        EXPECT_EQ(above, n != 6) << "n=" << n;
    }
}

TEST(OrthogonalBound, AllLowerBoundsBelowUpperBound) {
    for (int n = 1; n <= 60; ++n) {
        const double ub = upper_bound(n) + 1e-12;
        EXPECT_LE(orthogonal_lower_bound(n).probability, ub) << "n=" << n;
        EXPECT_LE(best_axis_partition(n).probability, ub) << "n=" << n;
        EXPECT_LE(random_lower_bound_asymptotic(n).probability, ub) << "n=" << n;
    }
}

TEST(BestAxisPartition, ExhaustiveSearch) {
    for (int n = 1; n <= 24; ++n) {
        const OrthogonalBound best = best_axis_partition(n);
        EXPECT_GE(best.probability, orthogonal_lower_bound(n).probability - 1e-15);
        EXPECT_EQ(best.partition.x + best.partition.y + best.partition.z, n);
        for (int x = 0; x <= n; ++x) {
            for (int y = 0; y <= x; ++y) {
                const int z = n - x - y;
                if (z < 0 || z > y) continue;
                EXPECT_LE(walk_probability(n, lattice_walk_distance(x, y, z)), best.probability + 1e-15);
            }
        }
    }
    EXPECT_EQ(best_axis_partition(4).partition, (AxisPartition{2, 1, 1}));
}

}  // namespace
}  // namespace qracsr
