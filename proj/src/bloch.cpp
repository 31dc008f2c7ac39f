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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qracsr {

BlochVector BlochVector::from_unit(const Vec3 &v) {
    const double n = norm(v);
    if (!std::isfinite(n) || std::abs(n - 1.0) > kUnitTolerance) {
        throw std::invalid_argument("Bloch vector is not unit length");
    }
    return BlochVector(v);
}

BlochVector BlochVector::normalize(const Vec3 &v) {
    const double n = norm(v);
    if (!std::isfinite(n) || n < kUnitTolerance) {
        throw std::invalid_argument("cannot normalize a zero vector");
    }
    return BlochVector((1.0 / n) * v);
}

QubitState QubitState::from_amplitudes(Complex alpha, Complex beta) {
    const double n = std::sqrt(std::norm(alpha) + std::norm(beta));
    if (!std::isfinite(n) || n < kUnitTolerance) {
        throw std::invalid_argument("zero amplitude vector");
    }
    alpha /= n;
    beta /= n;
    const double a = std::abs(alpha);
    if (a < kUnitTolerance) {
        return QubitState(Complex(0.0, 0.0), Complex(1.0, 0.0));
    }
    // Remove the global phase so that alpha is real and positive.
    const Complex phase = std::conj(alpha) / a;
    return QubitState(Complex(a, 0.0), beta * phase);
}

QubitState Measurement::outcome0_state() const { return state_from_bloch(direction); }

QubitState Measurement::outcome1_state() const { return state_from_bloch(direction.antipode()); }

BlochVector bloch_from_angles(double theta, double phi) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
        throw std::invalid_argument("theta must lie in [0, pi]");
    }
    if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) {
        throw std::invalid_argument("phi must lie in [0, 2 pi)");
    }
    const double s = std::sin(theta);
    return BlochVector::normalize({s * std::cos(phi), s * std::sin(phi), std::cos(theta)});
}

QubitState state_from_bloch(const BlochVector &r) {
    const double zp = r.z() + 1.0;
    if (zp < kUnitTolerance) {
        return QubitState::from_amplitudes(0.0, 1.0);
    }
    const double alpha = std::sqrt(zp / 2.0);
    const Complex beta = Complex(r.x(), r.y()) / std::sqrt(2.0 * zp);
    return QubitState::from_amplitudes(alpha, beta);
}

BlochVector bloch_from_state(const QubitState &psi) {
    const Complex ab = std::conj(psi.alpha()) * psi.beta();
    const double z = std::norm(psi.alpha()) - std::norm(psi.beta());
    return BlochVector::normalize({2.0 * ab.real(), 2.0 * ab.imag(), z});
}

double transition_probability(const BlochVector &r1, const BlochVector &r2) {
    return std::clamp(0.5 * (1.0 + dot(r1.vec(), r2.vec())), 0.0, 1.0);
}

OutcomeProbabilities outcome_probabilities(const BlochVector &state, const Measurement &m) {
    const double c = std::clamp(dot(state.vec(), m.direction.vec()), -1.0, 1.0);
    return {0.5 * (1.0 + c), 0.5 * (1.0 - c)};
}

Complex beta_coefficient(const QubitState &psi) { return psi.beta(); }

double amplitude_overlap(const QubitState &a, const QubitState &b) {
    return std::norm(std::conj(a.alpha()) * b.alpha() + std::conj(a.beta()) * b.beta());
}

}  // namespace qracsr
