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

// Optimal classical n -> 1 random access codes with shared randomness.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qracsr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A probability kept both as an exact rational and as a double.
struct ExactProbability {
    Rational exact;
    double value = 0.0;
};

struct ProbabilityInterval {
    double lower = 0.0;
    double upper = 0.0;
};

/// Per-index decoding rule applied to the single transmitted bit.
enum class Decoder : std::uint8_t { Constant0, Constant1, Identity, Negation };

/// Deterministic strategy: one transmitted bit per input string plus one
/// decoding rule per index. encode is indexed by the little-endian integer
/// form of the input.
struct PureClassicalStrategy {
    int n = 0;
    std::vector<std::uint8_t> encode;
    std::vector<Decoder> decode;
};

BigInt binomial(unsigned n, unsigned k);

/// 1/2 + C(n-1, floor((n-1)/2)) / 2^n. Throws std::invalid_argument for n < 1
/// and for n > 64.
ExactProbability optimal_classical_probability(int n);

/// Majority encoding with identity decoding, evaluated through the explicit
/// sums over the Hamming weight of the majority symbol.
ExactProbability majority_strategy_probability(int n);

/// Majority encoding (ties sent as 0) with identity decoders.
PureClassicalStrategy majority_strategy(int n);

/// Average success probability of a pure strategy under uniform inputs.
/// Requires n <= 20.
Rational strategy_average(const PureClassicalStrategy &strategy);

/// 1/2 + 1/sqrt(2 pi n).
double classical_asymptotic(int n);

/// Stirling brackets on the optimal probability; requires n >= 2.
ProbabilityInterval classical_bounds(int n);

/// Maximum over all 2^(2^n) encoding tables with the best decoders for each
/// table. Throws CostGuardError for n > 4.
ExactProbability brute_force_optimal(int n);

/// Both weighted binomial-sum identities for the given m >= 1, evaluated
/// with exact integers.
bool counting_identity_check(int m);

}  // namespace qracsr
