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

#include "qracsr/povm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qracsr {
namespace {

constexpr double kEigenTolerance = 1e-12;

double clamp_unit(double v) {
    if (v < -kEigenTolerance || v > 1.0 + kEigenTolerance) {
        throw std::invalid_argument("POVM effect eigenvalue outside [0, 1]");
    }
    return std::clamp(v, 0.0, 1.0);
}

}  // namespace

Povm2 Povm2::make(double a, double b, const Measurement &basis) {
    if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0)) {
        throw std::invalid_argument("POVM weights must lie in [0, 1]");
    }
    return {a, b, basis};
}

Povm2 Povm2::from_effect(double e00, Complex e01, double e11) {
    // E0 = t I + (s/2) n.sigma with n the Bloch axis of the eigenvector for
    // the larger eigenvalue.
    const double trace_half = 0.5 * (e00 + e11);
    const Vec3 axis_scaled{2.0 * e01.real(), -2.0 * e01.imag(), e00 - e11};
    const double spread = norm(axis_scaled);
    const double hi = clamp_unit(trace_half + 0.5 * spread);
    const double lo = clamp_unit(trace_half - 0.5 * spread);
    if (spread < kEigenTolerance) return make(hi, lo, Measurement{});
    return make(hi, lo, Measurement{BlochVector::normalize(axis_scaled)});
}

OutcomePair povm_outcome_probs(const Povm2 &povm, const QubitState &state) {
    const BlochVector r = bloch_from_state(state);
    // cos^2(theta/2) and sin^2(theta/2) with theta the polar angle about
    // the POVM basis axis.
    const OutcomeProbabilities basis = outcome_probabilities(r, povm.basis);
    const double p0 = povm.a * basis.p0 + povm.b * basis.p1;
    return {p0, 1.0 - p0};
}

EnhancedMixture decompose_povm(const Povm2 &povm) {
    const double mu = std::min(povm.a, povm.b);
    return {mu, 1.0 - (povm.a + povm.b) + mu, povm.a - mu, povm.b - mu, povm.basis};
}

OutcomePair mixture_outcome_probs(const EnhancedMixture &mixture, const QubitState &state) {
    const OutcomeProbabilities basis = outcome_probabilities(bloch_from_state(state), mixture.basis);
    const double p0 = mixture.c0 + mixture.c01 * basis.p0 + mixture.c10 * basis.p1;
    const double p1 = mixture.c1 + mixture.c01 * basis.p1 + mixture.c10 * basis.p0;
    return {p0, p1};
}

}  // namespace qracsr
