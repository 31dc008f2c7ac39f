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

// Derivative-free maximization of the direction-sum objective over n
// measurement axes.

#include <cstdint>
#include <vector>

#include "qracsr/bloch.hpp"

namespace qracsr {

struct OptimizerConfig {
    int restarts = 50;
    int max_iterations = 20000;
    std::uint64_t seed = 1;
    /// Simplex spread in objective units at which a local search stops.
    double tolerance = 1e-10;
    /// Initial simplex edge, in radians.
    double initial_step = 0.3;
    /// Worker threads for independent restarts; results do not depend on it.
    int threads = 1;

    /// Throws std::invalid_argument on a non-positive count or tolerance.
    void validate() const;
};

struct RestartTrace {
    int restart = 0;
    double s_value = 0.0;
    double probability = 0.0;
    int iterations = 0;
    int evaluations = 0;
};

struct OptimizerResult {
    std::vector<Measurement> measurements;
    double probability = 0.0;
    double s_value = 0.0;
    int best_restart = 0;
    std::vector<RestartTrace> traces;
};

struct PolishResult {
    std::vector<Measurement> measurements;
    double probability = 0.0;
};

/// Multi-start simplex search with the first axis fixed to +z and the
/// second axis in the xz half-plane. Requires 2 <= n <= 12 (CostGuardError
/// above). Reported axes are flipped into the upper hemisphere.
OptimizerResult optimize(int n, const OptimizerConfig &config);

/// Local simplex search started at the given axes; the result is never
/// worse than the input. Requires 1 <= n <= 12.
PolishResult polish(const std::vector<Measurement> &measurements, const OptimizerConfig &config);

/// Probability 1/2 (1 + S / (2^n n)) of the optimally encoded code.
double optimal_code_probability(const std::vector<Measurement> &measurements);

/// Representative of +/-v with positive z (then positive y, then x).
BlochVector upper_hemisphere(const BlochVector &v);

}  // namespace qracsr
