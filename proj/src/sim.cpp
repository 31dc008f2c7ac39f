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

#include <algorithm>
#include <stdexcept>

namespace qracsr {

SharedRandomness draw_shared_randomness(int n, CounterRng &rng) {
    SharedRandomness s;
    const std::uint64_t word = rng.next_u64();
    s.mask = n >= 64 ? word : word & ((std::uint64_t{1} << n) - 1);
    s.shift = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    return s;
}

std::uint64_t cyclic_shift(std::uint64_t x, int n, int shift) {
    std::uint64_t out = 0;
    for (int j = 0; j < n; ++j) {
        if ((x >> j) & 1u) out |= std::uint64_t{1} << ((j + shift) % n);
    }
    return out;
}

int sample_measurement(const BlochVector &state, const Measurement &m, CounterRng &rng) {
    const OutcomeProbabilities p = outcome_probabilities(state, m);
    return rng.bernoulli(p.p0) ? 0 : 1;
}

SimReport simulate_code(const QracCode &code, std::uint64_t trials_per_input, std::uint64_t seed, bool randomize) {
    if (trials_per_input < 1) throw std::invalid_argument("trials must be at least 1");
    const int n = code.n();
    SimReport report;
    report.n = n;
    report.trials_per_input = trials_per_input;
    report.seed = seed;
    report.randomized = randomize;
    report.per_input.resize(code.input_count() * static_cast<std::size_t>(n));
    const auto &ms = code.measurements();
    for (std::uint64_t x = 0; x < code.input_count(); ++x) {
        for (int i = 0; i < n; ++i) {
            const std::size_t slot = x * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
            CounterRng rng(seed, slot);
            std::uint64_t successes = 0;
            for (std::uint64_t t = 0; t < trials_per_input; ++t) {
                int guess = 0;
                if (randomize) {
                    // Alice sends E(Shift_d(x xor r)); Bob measures the
                    // shifted index and undoes the mask bit.
                    const SharedRandomness sr = draw_shared_randomness(n, rng);
                    const std::uint64_t sent = cyclic_shift(x ^ sr.mask, n, sr.shift);
                    const int measured = (i + sr.shift) % n;
                    const int outcome = sample_measurement(code.encoding(sent), ms[static_cast<std::size_t>(measured)], rng);
                    guess = outcome ^ static_cast<int>((sr.mask >> i) & 1u);
                } else {
                    guess = sample_measurement(code.encoding(x), ms[static_cast<std::size_t>(i)], rng);
                }
                if (guess == static_cast<int>((x >> i) & 1u)) ++successes;
            }
            report.per_input[slot] = static_cast<double>(successes) / static_cast<double>(trials_per_input);
        }
    }
    double total = 0.0;
    for (double f : report.per_input) total += f;
    report.average = total / static_cast<double>(report.per_input.size());
    const auto [lo, hi] = std::minmax_element(report.per_input.begin(), report.per_input.end());
    report.worst_case = *lo;
    report.best_case = *hi;
    report.average = std::clamp(report.average, *lo, *hi);
    return report;
}

}  // namespace qracsr
