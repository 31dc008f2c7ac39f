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

// Lower bounds on the optimal quantum success probability.

#include <cstdint>
#include <vector>

#include "qracsr/bloch.hpp"

namespace qracsr {

struct WalkEstimate {
    double mean_distance = 0.0;
    /// Sample standard deviation divided by sqrt(trials).
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

/// Mean length of a sum of n independent uniform unit vectors. Requires
/// n >= 1 and trials >= 1.
WalkEstimate random_walk_distance_mc(int n, std::uint64_t trials, std::uint64_t seed);

/// Converts a mean walk length into a success probability: 1/2 (1 + d/n).
double walk_probability(int n, double mean_distance);

struct AsymptoticBound {
    double probability = 0.0;
    /// The formula is a large-n statement; flagged for n < 4.
    bool small_n_caveat = false;
};

/// 1/2 + sqrt(2 / (3 pi n)).
AsymptoticBound random_lower_bound_asymptotic(int n);

/// Exact mean length of the walk with x steps along one axis, y along the
/// second and z along the third, each step of random sign. Throws
/// CostGuardError when x + y + z > 60.
double lattice_walk_distance(int x, int y, int z);

struct AxisPartition {
    int x = 0;
    int y = 0;
    int z = 0;
    friend bool operator==(const AxisPartition &, const AxisPartition &) = default;
};

struct OrthogonalBound {
    double probability = 0.0;
    AxisPartition partition;
};

/// Axis construction with the balanced split ((n+2)/3, (n+1)/3, n/3).
/// Requires 1 <= n <= 60.
OrthogonalBound orthogonal_lower_bound(int n);

/// Exhaustive search over x >= y >= z; ties go to the lexicographically
/// smallest partition. Requires 1 <= n <= 60.
OrthogonalBound best_axis_partition(int n);

/// x measurements along the x axis, then y along y, then z along z.
std::vector<Measurement> axis_measurements(const AxisPartition &partition);

}  // namespace qracsr
