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

#include "qracsr/bloch.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace qracsr {
namespace {

constexpr double kPi = std::numbers::pi;

void expect_vec(const BlochVector &b, double x, double y, double z, double tol = 1e-12) {
    EXPECT_NEAR(b.x(), x, tol);
    EXPECT_NEAR(b.y(), y, tol);
    EXPECT_NEAR(b.z(), z, tol);
}

TEST(BlochFromAngles, PolesAndEquator) {
    expect_vec(bloch_from_angles(0.0, 0.0), 0, 0, 1);
    expect_vec(bloch_from_angles(kPi / 2, 0.0), 1, 0, 0);
    expect_vec(bloch_from_angles(kPi / 2, kPi / 2), 0, 1, 0);
}

TEST(BlochFromAngles, RejectsOutOfRange) {
    EXPECT_THROW(bloch_from_angles(-0.1, 0.0), std::invalid_argument);
    EXPECT_THROW(bloch_from_angles(kPi + 0.1, 0.0), std::invalid_argument);
    EXPECT_THROW(bloch_from_angles(1.0, 2 * kPi), std::invalid_argument);
    EXPECT_THROW(bloch_from_angles(1.0, -0.5), std::invalid_argument);
    EXPECT_THROW(bloch_from_angles(std::nan(""), 0.0), std::invalid_argument);
}

TEST(BlochVector, ConstructionValidatesNorm) {
    EXPECT_NO_THROW(BlochVector::from_unit({0, 0, 1}));
    EXPECT_THROW(BlochVector::from_unit({0, 0, 1.001}), std::invalid_argument);
    EXPECT_THROW(BlochVector::normalize({0, 0, 0}), std::invalid_argument);
    const BlochVector b = BlochVector::normalize({3, 0, 4});
    expect_vec(b, 0.6, 0.0, 0.8);
}

TEST(StateFromBloch, Examples) {
    const QubitState north = state_from_bloch(BlochVector::from_unit({0, 0, 1}));
    EXPECT_NEAR(std::abs(north.alpha() - Complex(1, 0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(north.beta()), 0.0, 1e-12);

    const QubitState south = state_from_bloch(BlochVector::from_unit({0, 0, -1}));
    EXPECT_EQ(south.alpha(), Complex(0, 0));
    EXPECT_EQ(south.beta(), Complex(1, 0));

    const QubitState plus = state_from_bloch(BlochVector::from_unit({1, 0, 0}));
    EXPECT_NEAR(std::abs(plus.alpha() - Complex(1 / std::sqrt(2.0), 0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(plus.beta() - Complex(1 / std::sqrt(2.0), 0)), 0.0, 1e-12);
}

TEST(BlochFromState, Examples) {
    const double h = 1 / std::sqrt(2.0);
    expect_vec(bloch_from_state(QubitState::from_amplitudes(1, 0)), 0, 0, 1);
    expect_vec(bloch_from_state(QubitState::from_amplitudes(h, h)), 1, 0, 0);
    expect_vec(bloch_from_state(QubitState::from_amplitudes(h, Complex(0, h))), 0, 1, 0);
    EXPECT_THROW(QubitState::from_amplitudes(0, 0), std::invalid_argument);
}

TEST(QubitState, CanonicalPhase) {
    // Global phase e^{i 0.7} is removed; alpha becomes real and positive.
    const Complex g = std::polar(1.0, 0.7);
    const QubitState s = QubitState::from_amplitudes(g * 0.6, g * Complex(0, 0.8));
    EXPECT_NEAR(s.alpha().imag(), 0.0, 1e-15);
    EXPECT_NEAR(s.alpha().real(), 0.6, 1e-12);
    EXPECT_NEAR(std::abs(s.beta() - Complex(0, 0.8)), 0.0, 1e-12);
    const QubitState t = QubitState::from_amplitudes(0, Complex(0, -2));
    EXPECT_EQ(t.beta(), Complex(1, 0));
}

TEST(TransitionProbability, Examples) {
    testing::Pcg rng(1);
    const BlochVector r = rng.bloch();
    EXPECT_NEAR(transition_probability(r, r), 1.0, 1e-12);
    EXPECT_NEAR(transition_probability(r, r.antipode()), 0.0, 1e-12);
    const BlochVector a = BlochVector::from_unit({1, 0, 0});
    const BlochVector b = BlochVector::normalize({1, 1, 0});
    EXPECT_NEAR(transition_probability(a, b), 0.8535534, 1e-7);
    EXPECT_NEAR(transition_probability(a, b), 0.853553, 1e-6);
}

TEST(OutcomeProbabilities, Examples) {
    const Measurement m{BlochVector::from_unit({0, 0, 1})};
    const auto same = outcome_probabilities(m.direction, m);
    EXPECT_NEAR(same.p0, 1.0, 1e-12);
    EXPECT_NEAR(same.p1, 0.0, 1e-12);
    const auto perp = outcome_probabilities(BlochVector::from_unit({1, 0, 0}), m);
    EXPECT_NEAR(perp.p0, 0.5, 1e-12);
    EXPECT_NEAR(perp.p1, 0.5, 1e-12);
    const auto tilted = outcome_probabilities(bloch_from_angles(kPi / 4, 0.3), m);
    EXPECT_NEAR(tilted.p0, (1 + std::cos(kPi / 4)) / 2, 1e-12);
    EXPECT_NEAR(tilted.p0, 0.8535534, 1e-7);
    EXPECT_NEAR(tilted.p1, 0.1464466, 1e-7);
}

TEST(BetaCoefficient, Examples) {
    EXPECT_EQ(beta_coefficient(QubitState::from_amplitudes(1, 0)), Complex(0, 0));
    const Complex south = beta_coefficient(QubitState::from_amplitudes(0, Complex(0, 1)));
    EXPECT_EQ(south, Complex(1, 0));
    const double h = 1 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(beta_coefficient(QubitState::from_amplitudes(h, h)) - h), 0.0, 1e-12);
}

TEST(BlochProperties, RoundTripOnRandomVectors) {
    testing::Pcg rng(2024);
    for (int t = 0; t < 10000; ++t) {
        const BlochVector r = rng.bloch();
        const QubitState s = state_from_bloch(r);
        EXPECT_NEAR(std::norm(s.alpha()) + std::norm(s.beta()), 1.0, 1e-12);
        EXPECT_EQ(s.alpha().imag(), 0.0);
        EXPECT_GE(s.alpha().real(), 0.0);
        EXPECT_LE(std::abs(beta_coefficient(s)), 1.0 + 1e-12);
        const BlochVector back = bloch_from_state(s);
        ASSERT_LT(norm(back.vec() - r.vec()), 1e-10) << "trial " << t;
    }
}

TEST(BlochProperties, OutcomesSumToOne) {
    testing::Pcg rng(7);
    for (int t = 0; t < 10000; ++t) {
        const auto p = outcome_probabilities(rng.bloch(), Measurement{rng.bloch()});
        ASSERT_NEAR(p.p0 + p.p1, 1.0, 1e-12);
        ASSERT_GE(p.p0, 0.0);
        ASSERT_GE(p.p1, 0.0);
    }
}

TEST(BlochProperties, TransitionMatchesAmplitudeOverlap) {
    testing::Pcg rng(11);
    for (int t = 0; t < 10000; ++t) {
        const BlochVector a = rng.bloch();
        const BlochVector b = rng.bloch();
        ASSERT_NEAR(transition_probability(a, b), amplitude_overlap(state_from_bloch(a), state_from_bloch(b)), 1e-10);
    }
}

TEST(BlochProperties, AntipodesGiveOrthonormalPairs) {
    testing::Pcg rng(13);
    for (int t = 0; t < 10000; ++t) {
        const Measurement m{rng.bloch()};
        const QubitState s0 = m.outcome0_state();
        const QubitState s1 = m.outcome1_state();
        const Complex inner = std::conj(s0.alpha()) * s1.alpha() + std::conj(s0.beta()) * s1.beta();
        ASSERT_LT(std::abs(inner), 1e-10);
    }
    // Exact poles.
    const Measurement z{BlochVector::from_unit({0, 0, 1})};
    EXPECT_LT(std::sqrt(amplitude_overlap(z.outcome0_state(), z.outcome1_state())), 1e-12);
}

}  // namespace
}  // namespace qracsr
