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

// Quantum n -> 1 random access codes with shared randomness: a code is a
// list of measurement axes and one encoding point per input string.

#include <cstdint>
#include <span>
#include <vector>

#include "qracsr/bitstring.hpp"
#include "qracsr/bloch.hpp"

namespace qracsr {

/// Largest n for which the 2^n encoding table is materialized.
inline constexpr int kMaxCodeLength = 24;

/// Below this norm a signed direction sum is treated as zero.
inline constexpr double kNeutralTolerance = 1e-12;

class QracCode {
  public:
    /// encodings[x] is the state sent for the little-endian input x. Throws
    /// std::invalid_argument on size mismatch and CostGuardError when n
    /// exceeds kMaxCodeLength.
    QracCode(std::vector<Measurement> measurements, std::vector<BlochVector> encodings);

    int n() const { return static_cast<int>(measurements_.size()); }
    std::size_t input_count() const { return encodings_.size(); }
    const std::vector<Measurement> &measurements() const { return measurements_; }
    const std::vector<BlochVector> &encodings() const { return encodings_; }
    const BlochVector &encoding(std::uint64_t x) const { return encodings_[x]; }
    const BlochVector &encoding(const BitString &x) const;

  private:
    std::vector<Measurement> measurements_;
    std::vector<BlochVector> encodings_;
};

struct CodeReport {
    int n = 0;
    /// Success probability for input x and index i at position x * n + i.
    std::vector<double> per_input;
    double average = 0.0;
    /// Minimum over per_input: the worst case without input randomization.
    double worst_case = 0.0;
    /// Worst case once shared randomness flattens all inputs to the average.
    double randomized_worst_case = 0.0;
    double s_value = 0.0;
    /// 1/2 (1 + s_value / (2^n n)).
    double s_value_probability = 0.0;
    /// Every encoding point lies along its signed direction sum.
    bool optimally_encoded = false;
    /// Inputs whose signed direction sum vanishes; their success
    /// probability does not depend on the encoding point.
    std::vector<std::uint64_t> neutral_inputs;

    double probability(std::uint64_t x, int index) const {
        return per_input[x * static_cast<std::size_t>(n) + static_cast<std::size_t>(index)];
    }
};

struct OptimalEncoding {
    std::vector<BlochVector> points;
    std::vector<std::uint64_t> neutral_inputs;
};

/// Sum over i of (-1)^{x_i} v_i.
Vec3 signed_direction_sum(std::span<const Measurement> measurements, std::uint64_t x);
Vec3 signed_direction_sum(std::span<const Measurement> measurements, const BitString &x);

/// Each point is the normalized signed direction sum; a vanishing sum maps
/// to the north pole and the input is listed as neutral.
OptimalEncoding optimal_encoding(std::span<const Measurement> measurements);

QracCode make_optimal_code(std::vector<Measurement> measurements);

/// Sum of ||v_x|| over all 2^n sign patterns. Throws CostGuardError for
/// n > kMaxCodeLength.
double s_value(std::span<const Measurement> measurements);

CodeReport evaluate(const QracCode &code);

/// 1/2 + 1/(2 sqrt(n)).
double upper_bound(int n);

/// Sum of ||v_x||^2 over all sign patterns; n * 2^n for unit vectors.
/// Throws CostGuardError for n > 20.
double parallelogram_sum(std::span<const Measurement> measurements);
bool parallelogram_check(std::span<const Measurement> measurements);

struct DominanceSearchReport {
    int n = 0;
    int trials = 0;
    /// Smallest (optimal quantum average - optimal classical) seen.
    double smallest_margin = 0.0;
    /// Measurement sets whose optimal quantum average fell below the
    /// classical optimum by more than 1e-12.
    std::vector<std::vector<Measurement>> counterexamples;
};

/// Samples random measurement sets and compares the optimally encoded
/// average against the optimal classical probability.
DominanceSearchReport classical_dominance_search(int n, int trials, std::uint64_t seed);

}  // namespace qracsr
