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

#pragma once

// Single-qubit geometry: Bloch vectors, canonical amplitude pairs, and
// orthogonal measurements. Everything is a value type; no density matrices
// are materialized since the Bloch form gives all needed probabilities.

#include <complex>
#include <utility>

#include "qracsr/vec3.hpp"

namespace qracsr {

using Complex = std::complex<double>;

inline constexpr double kUnitTolerance = 1e-12;

/// Unit vector on the Bloch sphere (a pure state or a measurement axis).
class BlochVector {
  public:
    /// North pole |0>.
    constexpr BlochVector() = default;

    /// Accepts a vector whose norm is within kUnitTolerance of 1; throws
    /// std::invalid_argument otherwise. The components are kept verbatim.
    static BlochVector from_unit(const Vec3 &v);

    /// Rescales any non-zero vector to unit length. Throws on (near) zero.
    static BlochVector normalize(const Vec3 &v);

    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }
    const Vec3 &vec() const { return v_; }

    BlochVector antipode() const { return BlochVector(-v_); }

    friend bool operator==(const BlochVector &, const BlochVector &) = default;

  private:
    explicit constexpr BlochVector(const Vec3 &v) : v_(v) {}
    Vec3 v_{0.0, 0.0, 1.0};
};

/// Normalized amplitude pair (alpha, beta) in canonical phase: alpha is real
/// and non-negative; when alpha vanishes, beta is the real number 1.
class QubitState {
  public:
    constexpr QubitState() = default;

    /// Normalizes and canonicalizes an arbitrary non-zero amplitude pair.
    /// Throws std::invalid_argument on the zero vector.
    static QubitState from_amplitudes(Complex alpha, Complex beta);

    Complex alpha() const { return alpha_; }
    Complex beta() const { return beta_; }

  private:
    constexpr QubitState(Complex a, Complex b) : alpha_(a), beta_(b) {}
    Complex alpha_{1.0, 0.0};
    Complex beta_{0.0, 0.0};
};

/// Orthogonal two-outcome measurement. Outcome 0 corresponds to the state
/// along `direction`, outcome 1 to its antipode.
struct Measurement {
    BlochVector direction;

    QubitState outcome0_state() const;
    QubitState outcome1_state() const;
};

struct OutcomeProbabilities {
    double p0 = 0.0;
    double p1 = 0.0;
};

/// (sin t cos p, sin t sin p, cos t). Requires theta in [0, pi] and phi in
/// [0, 2 pi); throws std::invalid_argument otherwise.
BlochVector bloch_from_angles(double theta, double phi);

/// alpha = sqrt((z+1)/2), beta = (x+iy)/sqrt(2(z+1)); the south pole maps
/// to (0, 1).
QubitState state_from_bloch(const BlochVector &r);

BlochVector bloch_from_state(const QubitState &psi);

/// |<psi1|psi2>|^2 expressed through Bloch vectors: (1 + r1.r2) / 2.
double transition_probability(const BlochVector &r1, const BlochVector &r2);

OutcomeProbabilities outcome_probabilities(const BlochVector &state, const Measurement &m);

/// The unit-disk coordinate of a canonical state.
Complex beta_coefficient(const QubitState &psi);

/// |<a|b>|^2 computed directly from amplitudes.
double amplitude_overlap(const QubitState &a, const QubitState &b);

}  // namespace qracsr
