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

#include "qracsr/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qracsr/errors.hpp"
#include "qracsr/rng.hpp"

namespace qracsr {
namespace {

constexpr std::uint64_t kTrialsPerStream = 1u << 16;
constexpr int kMaxLatticeSteps = 60;

std::vector<std::uint64_t> binomial_row(int n) {
    std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 1);
    for (int k = 1; k < n; ++k) {
        // C(n,k) = C(n,k-1) (n-k+1) / k, exact for n <= 62.
        row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)] *
                                           static_cast<std::uint64_t>(n - k + 1) /
                                           static_cast<std::uint64_t>(k);
    }
    return row;
}

void require_bound_length(int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (n > kMaxLatticeSteps) throw CostGuardError("axis construction limited to n <= 60");
}

double partition_probability(const AxisPartition &p) {
    const int n = p.x + p.y + p.z;
    return walk_probability(n, lattice_walk_distance(p.x, p.y, p.z));
}

}  // namespace

WalkEstimate random_walk_distance_mc(int n, std::uint64_t trials, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    WalkEstimate est;
    est.trials = trials;
    est.seed = seed;
    if (n == 1) {
        est.mean_distance = 1.0;
        return est;
    }
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::uint64_t start = 0; start < trials; start += kTrialsPerStream) {
        CounterRng rng(seed, start / kTrialsPerStream);
        const std::uint64_t stop = std::min(trials, start + kTrialsPerStream);
        for (std::uint64_t t = start; t < stop; ++t) {
            Vec3 walk;
            for (int i = 0; i < n; ++i) walk += random_unit_vector(rng);
            const double d = norm(walk);
            sum += d;
            sum_sq += d * d;
        }
    }
    const double count = static_cast<double>(trials);
    est.mean_distance = sum / count;
    if (trials > 1) {
        const double var = std::max(0.0, (sum_sq - count * est.mean_distance * est.mean_distance) / (count - 1.0));
        est.std_error = std::sqrt(var / count);
    }
    return est;
}

double walk_probability(int n, double mean_distance) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    return 0.5 * (1.0 + mean_distance / n);
}

AsymptoticBound random_lower_bound_asymptotic(int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    return {0.5 + std::sqrt(2.0 / (3.0 * std::numbers::pi * n)), n < 4};
}

double lattice_walk_distance(int x, int y, int z) {
    if (x < 0 || y < 0 || z < 0) throw std::invalid_argument("step counts must be non-negative");
    const int n = x + y + z;
    if (n < 1) throw std::invalid_argument("the walk needs at least one step");
    if (n > kMaxLatticeSteps) throw CostGuardError("lattice walk limited to 60 steps");
    const auto bx = binomial_row(x);
    const auto by = binomial_row(y);
    const auto bz = binomial_row(z);
    double total = 0.0;
    for (int i = 0; i <= x; ++i) {
        const double dx = x - 2 * i;
        for (int j = 0; j <= y; ++j) {
            const double dy = y - 2 * j;
            const std::uint64_t wxy = bx[static_cast<std::size_t>(i)] * by[static_cast<std::size_t>(j)];
            for (int k = 0; k <= z; ++k) {
                const double dz = z - 2 * k;
                const std::uint64_t w = wxy * bz[static_cast<std::size_t>(k)];
                total += static_cast<double>(w) * std::sqrt(dx * dx + dy * dy + dz * dz);
            }
        }
    }
    return std::ldexp(total, -n);
}

OrthogonalBound orthogonal_lower_bound(int n) {
    require_bound_length(n);
    const AxisPartition p{(n + 2) / 3, (n + 1) / 3, n / 3};
    return {partition_probability(p), p};
}

OrthogonalBound best_axis_partition(int n) {
    require_bound_length(n);
    OrthogonalBound best{-1.0, {}};
    // Lexicographic order over (x, y, z); strict improvement keeps the
    // smallest maximizer.
    for (int x = (n + 2) / 3; x <= n; ++x) {
        for (int y = 0; y <= x; ++y) {
            const int z = n - x - y;
            if (z < 0 || z > y) continue;
            const AxisPartition p{x, y, z};
            const double value = partition_probability(p);
            if (value > best.probability + 1e-15) best = {value, p};
        }
    }
    return best;
}

std::vector<Measurement> axis_measurements(const AxisPartition &partition) {
    if (partition.x < 0 || partition.y < 0 || partition.z < 0) {
        throw std::invalid_argument("step counts must be non-negative");
    }
    std::vector<Measurement> out;
    out.insert(out.end(), static_cast<std::size_t>(partition.x), Measurement{BlochVector::from_unit({1, 0, 0})});
    out.insert(out.end(), static_cast<std::size_t>(partition.y), Measurement{BlochVector::from_unit({0, 1, 0})});
    out.insert(out.end(), static_cast<std::size_t>(partition.z), Measurement{BlochVector::from_unit({0, 0, 1})});
    return out;
}

}  // namespace qracsr
