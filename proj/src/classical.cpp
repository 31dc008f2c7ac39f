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

#include "qracsr/classical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qracsr/errors.hpp"

namespace qracsr {
namespace {

void require_length(int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (n > 64) throw std::invalid_argument("n must be at most 64 for exact arithmetic");
}

ExactProbability make_probability(const Rational &r) {
    return {r, static_cast<double>(r)};
}

BigInt pow2(unsigned k) { return BigInt(1) << k; }

}  // namespace

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

ExactProbability optimal_classical_probability(int n) {
    require_length(n);
    const auto nu = static_cast<unsigned>(n);
    const Rational excess(binomial(nu - 1, (nu - 1) / 2), pow2(nu));
    return make_probability(Rational(1, 2) + excess);
}

ExactProbability majority_strategy_probability(int n) {
    require_length(n);
    const auto nu = static_cast<unsigned>(n);
    const unsigned m = nu / 2;
    BigInt correct = 0;
    if (nu % 2 == 1) {
        for (unsigned i = m + 1; i <= nu; ++i) correct += i * binomial(nu, i);
        correct *= 2;
    } else {
        for (unsigned i = m + 1; i <= nu; ++i) correct += i * binomial(nu, i);
        correct = 2 * correct + m * binomial(nu, m);
    }
    return make_probability(Rational(correct, nu * pow2(nu)));
}

PureClassicalStrategy majority_strategy(int n) {
    if (n < 1 || n > 20) throw std::invalid_argument("majority table requires 1 <= n <= 20");
    PureClassicalStrategy s;
    s.n = n;
    s.encode.resize(std::size_t{1} << n);
    for (std::uint64_t x = 0; x < s.encode.size(); ++x) {
        s.encode[x] = 2 * std::popcount(x) > n ? 1 : 0;
    }
    s.decode.assign(static_cast<std::size_t>(n), Decoder::Identity);
    return s;
}

Rational strategy_average(const PureClassicalStrategy &strategy) {
    const int n = strategy.n;
    if (n < 1 || n > 20) throw std::invalid_argument("strategy evaluation requires 1 <= n <= 20");
    if (strategy.encode.size() != (std::size_t{1} << n) ||
        strategy.decode.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("strategy tables do not match n");
    }
    std::uint64_t correct = 0;
    for (std::uint64_t x = 0; x < strategy.encode.size(); ++x) {
        const unsigned sent = strategy.encode[x] & 1u;
        for (int i = 0; i < n; ++i) {
            unsigned guess = 0;
            switch (strategy.decode[static_cast<std::size_t>(i)]) {
                case Decoder::Constant0: guess = 0; break;
                case Decoder::Constant1: guess = 1; break;
                case Decoder::Identity: guess = sent; break;
                case Decoder::Negation: guess = sent ^ 1u; break;
            }
            if (guess == ((x >> i) & 1u)) ++correct;
        }
    }
    return Rational(BigInt(correct), BigInt(n) << n);
}

double classical_asymptotic(int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    return 0.5 + 1.0 / std::sqrt(2.0 * std::numbers::pi * n);
}

ProbabilityInterval classical_bounds(int n) {
    if (n < 2) throw std::invalid_argument("Stirling bounds require n >= 2");
    const double nd = n;
    const double two_pi = 2.0 * std::numbers::pi;
    if (n % 2 == 1) {
        const double scale = 1.0 / std::sqrt(two_pi * (nd - 1.0));
        return {0.5 + scale * std::exp(1.0 / (12.0 * nd - 11.0) - 2.0 / (6.0 * nd - 6.0)),
                0.5 + scale * std::exp(1.0 / (12.0 * nd - 12.0) - 2.0 / (6.0 * nd - 5.0))};
    }
    // Even n: the factorial bounds on (2m)! and (m!)^2 with m = n/2.
    const double scale = 1.0 / std::sqrt(two_pi * nd);
    return {0.5 + scale * std::exp(1.0 / (12.0 * nd + 1.0) - 2.0 / (6.0 * nd)),
            0.5 + scale * std::exp(1.0 / (12.0 * nd) - 2.0 / (6.0 * nd + 1.0))};
}

ExactProbability brute_force_optimal(int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (n > 4) throw CostGuardError("brute-force search is limited to n <= 4");
    const unsigned inputs = 1u << n;
    const std::uint32_t all = inputs == 32 ? ~0u : (1u << inputs) - 1u;
    // index_mask[i] has bit x set iff x_i = 1.
    std::uint32_t index_mask[4] = {};
    for (int i = 0; i < n; ++i) {
        for (unsigned x = 0; x < inputs; ++x) {
            if ((x >> i) & 1u) index_mask[i] |= 1u << x;
        }
    }
    unsigned best = 0;
    const std::uint64_t tables = std::uint64_t{1} << inputs;
    for (std::uint64_t t = 0; t < tables; ++t) {
        const auto ones = static_cast<std::uint32_t>(t);
        const std::uint32_t zeros = ~ones & all;
        unsigned correct = 0;
        for (int i = 0; i < n; ++i) {
            const std::uint32_t hi = index_mask[i];
            const std::uint32_t lo = ~hi & all;
            // For each received bit, the decoder outputs the majority value
            // of x_i among the inputs mapped to that bit.
            correct += static_cast<unsigned>(
                std::max(std::popcount(zeros & lo), std::popcount(zeros & hi)) +
                std::max(std::popcount(ones & lo), std::popcount(ones & hi)));
        }
        best = std::max(best, correct);
    }
    return make_probability(Rational(BigInt(best), BigInt(n) * inputs));
}

bool counting_identity_check(int m) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    const auto mu = static_cast<unsigned>(m);
    BigInt odd_sum = 0;
    for (unsigned i = mu + 1; i <= 2 * mu + 1; ++i) odd_sum += i * binomial(2 * mu + 1, i);
    // (2m+1)(2^(2m-1) + C(2m,m)/2), doubled to stay in integers.
    const BigInt odd_rhs2 = (2 * mu + 1) * (pow2(2 * mu) + binomial(2 * mu, mu));
    BigInt even_sum = 0;
    for (unsigned i = mu + 1; i <= 2 * mu; ++i) even_sum += i * binomial(2 * mu, i);
    const BigInt even_rhs = 2 * mu * pow2(2 * mu - 2);
    return 2 * odd_sum == odd_rhs2 && even_sum == even_rhs;
}

}  // namespace qracsr
