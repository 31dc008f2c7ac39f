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

// Monte Carlo simulation of the two-party protocol, optionally with the
// shared-randomness input scrambling that equalizes all inputs.

#include <cstdint>
#include <vector>

#include "qracsr/bitstring.hpp"
#include "qracsr/bloch.hpp"
#include "qracsr/qrac.hpp"
#include "qracsr/rng.hpp"

namespace qracsr {

struct SimReport {
    int n = 0;
    /// Empirical success frequency for input x and index i at x * n + i.
    std::vector<double> per_input;
    double average = 0.0;
    double worst_case = 0.0;
    double best_case = 0.0;
    std::uint64_t trials_per_input = 0;
    std::uint64_t seed = 0;
    bool randomized = false;

    double spread() const { return best_case - worst_case; }
};

/// Shared random data for one round: an XOR mask and a cyclic shift.
struct SharedRandomness {
    std::uint64_t mask = 0;
    int shift = 0;
};

/// Draws the mask from the low n bits of one word, then the shift by
/// rejection sampling.
SharedRandomness draw_shared_randomness(int n, CounterRng &rng);

/// Moves bit j of `x` to position (j + shift) mod n.
std::uint64_t cyclic_shift(std::uint64_t x, int n, int shift);

/// 0 with probability (1 + cos angle)/2 between state and direction.
int sample_measurement(const BlochVector &state, const Measurement &m, CounterRng &rng);

/// Runs trials_per_input rounds for every (x, i). Each input uses its own
/// random stream so results do not depend on evaluation order.
SimReport simulate_code(const QracCode &code, std::uint64_t trials_per_input, std::uint64_t seed, bool randomize);

}  // namespace qracsr
