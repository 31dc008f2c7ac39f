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

#include "qracsr/qrac.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qracsr/classical.hpp"
#include "qracsr/errors.hpp"
#include "qracsr/rng.hpp"

namespace qracsr {
namespace {

void guard_length(std::size_t n, int limit) {
    if (n == 0) throw std::invalid_argument("a code needs at least one measurement");
    if (n > static_cast<std::size_t>(limit)) {
        throw CostGuardError("2^n enumeration refused for n > " + std::to_string(limit));
    }
}

}  // namespace

QracCode::QracCode(std::vector<Measurement> measurements, std::vector<BlochVector> encodings)
    : measurements_(std::move(measurements)), encodings_(std::move(encodings)) {
    guard_length(measurements_.size(), kMaxCodeLength);
    if (encodings_.size() != (std::size_t{1} << measurements_.size())) {
        throw std::invalid_argument("a code needs exactly 2^n encoding points");
    }
}

const BlochVector &QracCode::encoding(const BitString &x) const {
    if (x.size() != n()) throw std::invalid_argument("input length does not match the code");
    return encodings_[x.bits()];
}

Vec3 signed_direction_sum(std::span<const Measurement> measurements, std::uint64_t x) {
    Vec3 sum;
    for (std::size_t i = 0; i < measurements.size(); ++i) {
        const Vec3 &v = measurements[i].direction.vec();
        if ((x >> i) & 1u) {
            sum -= v;
        } else {
            sum += v;
        }
    }
    return sum;
}

Vec3 signed_direction_sum(std::span<const Measurement> measurements, const BitString &x) {
    if (static_cast<std::size_t>(x.size()) != measurements.size()) {
        throw std::invalid_argument("input length does not match the measurement count");
    }
    return signed_direction_sum(measurements, x.bits());
}

OptimalEncoding optimal_encoding(std::span<const Measurement> measurements) {
    guard_length(measurements.size(), kMaxCodeLength);
    OptimalEncoding out;
    const std::uint64_t count = std::uint64_t{1} << measurements.size();
    out.points.reserve(count);
    for (std::uint64_t x = 0; x < count; ++x) {
        const Vec3 v = signed_direction_sum(measurements, x);
        if (norm(v) < kNeutralTolerance) {
            out.points.emplace_back();
            out.neutral_inputs.push_back(x);
        } else {
            out.points.push_back(BlochVector::normalize(v));
        }
    }
    return out;
}

QracCode make_optimal_code(std::vector<Measurement> measurements) {
    OptimalEncoding enc = optimal_encoding(measurements);
    return QracCode(std::move(measurements), std::move(enc.points));
}

double s_value(std::span<const Measurement> measurements) {
    guard_length(measurements.size(), kMaxCodeLength);
    const std::uint64_t count = std::uint64_t{1} << measurements.size();
    double total = 0.0;
    for (std::uint64_t x = 0; x < count; ++x) total += norm(signed_direction_sum(measurements, x));
    return total;
}

CodeReport evaluate(const QracCode &code) {
    const int n = code.n();
    const std::span<const Measurement> ms(code.measurements());
    CodeReport report;
    report.n = n;
    report.per_input.resize(code.input_count() * static_cast<std::size_t>(n));
    report.worst_case = std::numeric_limits<double>::infinity();
    report.optimally_encoded = true;
    double total = 0.0;
    double s = 0.0;
    for (std::uint64_t x = 0; x < code.input_count(); ++x) {
        const BlochVector &r = code.encoding(x);
        const Vec3 vx = signed_direction_sum(ms, x);
        const double len = norm(vx);
        s += len;
        if (len < kNeutralTolerance) {
            report.neutral_inputs.push_back(x);
        } else if (norm((1.0 / len) * vx - r.vec()) > 1e-9) {
            report.optimally_encoded = false;
        }
        for (int i = 0; i < n; ++i) {
            const double sign = ((x >> i) & 1u) ? -1.0 : 1.0;
            const double p = 0.5 * (1.0 + sign * dot(ms[static_cast<std::size_t>(i)].direction.vec(), r.vec()));
            report.per_input[x * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = p;
            total += p;
            report.worst_case = std::min(report.worst_case, p);
        }
    }
    // Rounding can push the mean of equal terms just below their minimum.
    report.average = std::max(report.worst_case, total / static_cast<double>(report.per_input.size()));
    report.randomized_worst_case = report.average;
    report.s_value = s;
    report.s_value_probability = 0.5 * (1.0 + s / (static_cast<double>(code.input_count()) * n));
    return report;
}

double upper_bound(int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    return 0.5 + 0.5 / std::sqrt(static_cast<double>(n));
}

double parallelogram_sum(std::span<const Measurement> measurements) {
    guard_length(measurements.size(), 20);
    const std::uint64_t count = std::uint64_t{1} << measurements.size();
    double total = 0.0;
    for (std::uint64_t x = 0; x < count; ++x) {
        const Vec3 v = signed_direction_sum(measurements, x);
        total += dot(v, v);
    }
    return total;
}

bool parallelogram_check(std::span<const Measurement> measurements) {
    const double count = std::ldexp(1.0, static_cast<int>(measurements.size()));
    const double expected = static_cast<double>(measurements.size()) * count;
    return std::abs(parallelogram_sum(measurements) - expected) <= 1e-8 * count;
}

DominanceSearchReport classical_dominance_search(int n, int trials, std::uint64_t seed) {
    if (n < 1 || trials < 1) throw std::invalid_argument("n and trials must be positive");
    guard_length(static_cast<std::size_t>(n), kMaxCodeLength);
    const double classical = optimal_classical_probability(n).value;
    DominanceSearchReport report;
    report.n = n;
    report.trials = trials;
    report.smallest_margin = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        CounterRng rng(seed, static_cast<std::uint64_t>(t));
        std::vector<Measurement> ms;
        ms.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) ms.push_back({BlochVector::normalize(random_unit_vector(rng))});
        const double quantum = 0.5 * (1.0 + s_value(ms) / (std::ldexp(1.0, n) * n));
        const double margin = quantum - classical;
        report.smallest_margin = std::min(report.smallest_margin, margin);
        if (margin < -1e-12) report.counterexamples.push_back(std::move(ms));
    }
    return report;
}

}  // namespace qracsr
