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

// Two-outcome qubit POVMs and their simulation by mixtures of orthogonal
// measurements and constant answers.

#include <array>

#include "qracsr/bloch.hpp"

namespace qracsr {

/// E0 = a |psi0><psi0| + b |psi1><psi1| in the basis of `basis`;
/// E1 = I - E0.
struct Povm2 {
    double a = 1.0;
    double b = 0.0;
    Measurement basis;

    /// Throws std::invalid_argument unless 0 <= a, b <= 1.
    static Povm2 make(double a, double b, const Measurement &basis);

    /// Diagonalizes the Hermitian effect E0 = [[e00, e01], [conj(e01), e11]].
    /// Eigenvalues must lie in [0, 1] up to 1e-12.
    static Povm2 from_effect(double e00, Complex e01, double e11);
};

/// Weights of: always 0, always 1, the basis measurement, and the basis
/// measurement with its outcome flipped.
struct EnhancedMixture {
    double c0 = 0.0;
    double c1 = 0.0;
    double c01 = 0.0;
    double c10 = 0.0;
    Measurement basis;
};

struct OutcomePair {
    double p0 = 0.0;
    double p1 = 0.0;
};

OutcomePair povm_outcome_probs(const Povm2 &povm, const QubitState &state);

EnhancedMixture decompose_povm(const Povm2 &povm);

OutcomePair mixture_outcome_probs(const EnhancedMixture &mixture, const QubitState &state);

}  // namespace qracsr
