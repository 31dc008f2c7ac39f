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

#include "qracsr/optimizer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "qracsr/errors.hpp"
#include "qracsr/qrac.hpp"
#include "qracsr/rng.hpp"

namespace qracsr {
namespace {

constexpr int kMaxOptimizerLength = 12;
constexpr int kMaxReseeds = 4;

using Point = std::vector<double>;

// Sum of ||v_x|| over sign patterns, using the symmetry x <-> complement:
// only patterns with the last sign positive are visited, in Gray-code
// order so each step flips one term.
double half_gray_sum(const std::vector<Vec3> &v) {
    const std::size_t n = v.size();
    Vec3 acc;
    for (const Vec3 &u : v) acc += u;
    if (n == 1) return 2.0 * norm(acc);
    std::vector<int> sign(n, 1);
    double total = norm(acc);
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    for (std::uint64_t k = 1; k < steps; ++k) {
        const auto j = static_cast<std::size_t>(std::countr_zero(k));
        acc -= (2.0 * sign[j]) * v[j];
        sign[j] = -sign[j];
        total += norm(acc);
    }
    return 2.0 * total;
}

Vec3 from_angles(double theta, double phi) {
    const double s = std::sin(theta);
    return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

// Gauge-fixed parameters: p[0] is the polar angle of axis 2 (azimuth 0);
// then (theta, phi) pairs for axes 3..n. Axis 1 is +z.
std::vector<Vec3> axes_from_params(const Point &p, int n) {
    std::vector<Vec3> v;
    v.reserve(static_cast<std::size_t>(n));
    v.push_back({0.0, 0.0, 1.0});
    if (n >= 2) v.push_back(from_angles(p[0], 0.0));
    for (int i = 2; i < n; ++i) {
        const auto k = static_cast<std::size_t>(2 * i - 3);
        v.push_back(from_angles(p[k], p[k + 1]));
    }
    return v;
}

Point params_from_axes(const std::vector<Vec3> &v) {
    const std::size_t n = v.size();
    Point p(n >= 2 ? 2 * n - 3 : 0);
    if (n >= 2) p[0] = std::atan2(v[1].x, v[1].z);
    for (std::size_t i = 2; i < n; ++i) {
        p[2 * i - 3] = std::acos(std::clamp(v[i].z, -1.0, 1.0));
        p[2 * i - 2] = std::atan2(v[i].y, v[i].x);
    }
    return p;
}

struct SearchOutcome {
    Point best;
    double value = 0.0;
    int iterations = 0;
    int evaluations = 0;
};

// Nelder-Mead maximization; the best vertex never gets worse. After
// convergence the simplex is rebuilt around the best point a few times to
// escape premature collapse.
SearchOutcome nelder_mead(const std::function<double(const Point &)> &f, Point start, double step,
                          double tolerance, int max_iterations) {
    const std::size_t dim = start.size();
    SearchOutcome out;
    out.best = start;
    out.value = f(start);
    out.evaluations = 1;
    if (dim == 0) return out;

    std::vector<Point> simplex(dim + 1);
    std::vector<double> values(dim + 1);
    auto rebuild = [&](const Point &centre, double centre_value) {
        simplex[0] = centre;
        values[0] = centre_value;
        for (std::size_t i = 0; i < dim; ++i) {
            simplex[i + 1] = centre;
            simplex[i + 1][i] += step;
            values[i + 1] = f(simplex[i + 1]);
            ++out.evaluations;
        }
    };
    rebuild(start, out.value);

    std::vector<std::size_t> order(dim + 1);
    Point centroid(dim), trial(dim), trial2(dim);
    auto blend = [&](Point &dst, double t, const Point &towards) {
        // dst = centroid + t (towards - centroid)
        for (std::size_t k = 0; k < dim; ++k) dst[k] = centroid[k] + t * (towards[k] - centroid[k]);
    };

    int reseeds = 0;
    double reseed_value = out.value;
    while (out.iterations < max_iterations) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return values[a] > values[b] || (values[a] == values[b] && a < b);
        });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[dim - 1];
        if (values[best] > out.value) {
            out.value = values[best];
            out.best = simplex[best];
        }
        if (values[best] - values[worst] <= tolerance) {
            if (reseeds >= kMaxReseeds || (reseeds > 0 && out.value <= reseed_value + tolerance)) break;
            ++reseeds;
            reseed_value = out.value;
            rebuild(out.best, out.value);
            continue;
        }
        ++out.iterations;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[i][k];
        }
        for (double &c : centroid) c /= static_cast<double>(dim);

        blend(trial, -1.0, simplex[worst]);
        const double reflected = f(trial);
        ++out.evaluations;
        if (reflected > values[best]) {
            blend(trial2, -2.0, simplex[worst]);
            const double expanded = f(trial2);
            ++out.evaluations;
            if (expanded > reflected) {
                simplex[worst] = trial2;
                values[worst] = expanded;
            } else {
                simplex[worst] = trial;
                values[worst] = reflected;
            }
            continue;
        }
        if (reflected > values[second_worst]) {
            simplex[worst] = trial;
            values[worst] = reflected;
            continue;
        }
        const bool outside = reflected > values[worst];
        blend(trial2, outside ? -0.5 : 0.5, simplex[worst]);
        const double contracted = f(trial2);
        ++out.evaluations;
        if (contracted > std::max(reflected, values[worst]) || (!outside && contracted > values[worst])) {
            simplex[worst] = trial2;
            values[worst] = contracted;
            continue;
        }
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == best) continue;
            for (std::size_t k = 0; k < dim; ++k) simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
            values[i] = f(simplex[i]);
            ++out.evaluations;
        }
    }
    for (std::size_t i = 0; i <= dim; ++i) {
        if (values[i] > out.value) {
            out.value = values[i];
            out.best = simplex[i];
        }
    }
    return out;
}

std::vector<Measurement> to_measurements(const std::vector<Vec3> &v) {
    std::vector<Measurement> ms;
    ms.reserve(v.size());
    for (const Vec3 &u : v) ms.push_back({BlochVector::normalize(u)});
    return ms;
}

double probability_from_s(double s, int n) { return 0.5 * (1.0 + s / (std::ldexp(1.0, n) * n)); }

}  // namespace

void OptimizerConfig::validate() const {
    if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");
    if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (!(initial_step > 0.0)) throw std::invalid_argument("initial_step must be positive");
    if (threads < 1) throw std::invalid_argument("threads must be at least 1");
}

BlochVector upper_hemisphere(const BlochVector &v) {
    const Vec3 &u = v.vec();
    const bool flip = u.z < 0.0 || (u.z == 0.0 && (u.y < 0.0 || (u.y == 0.0 && u.x < 0.0)));
    return flip ? v.antipode() : v;
}

double optimal_code_probability(const std::vector<Measurement> &measurements) {
    return probability_from_s(s_value(measurements), static_cast<int>(measurements.size()));
}

OptimizerResult optimize(int n, const OptimizerConfig &config) {
    config.validate();
    if (n < 2) throw std::invalid_argument("optimize requires n >= 2");
    if (n > kMaxOptimizerLength) throw CostGuardError("optimize is limited to n <= 12");
    const auto restarts = static_cast<std::size_t>(config.restarts);
    std::vector<SearchOutcome> outcomes(restarts);
    auto objective = [n](const Point &p) { return half_gray_sum(axes_from_params(p, n)); };

    auto run = [&](std::size_t r) {
        CounterRng rng(config.seed, r);
        std::vector<Vec3> start{{0.0, 0.0, 1.0}};
        for (int i = 1; i < n; ++i) start.push_back(random_unit_vector(rng));
        outcomes[r] = nelder_mead(objective, params_from_axes(start), config.initial_step, config.tolerance, config.max_iterations);
    };

    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(config.threads), restarts);
    if (workers <= 1) {
        for (std::size_t r = 0; r < restarts; ++r) run(r);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t r = w; r < restarts; r += workers) run(r);
            });
        }
        for (auto &t : pool) t.join();
    }

    OptimizerResult result;
    result.traces.reserve(restarts);
    std::vector<std::vector<Measurement>> candidates;
    candidates.reserve(restarts);
    for (std::size_t r = 0; r < restarts; ++r) {
        candidates.push_back(to_measurements(axes_from_params(outcomes[r].best, n)));
        const double s = s_value(candidates.back());
        result.traces.push_back({static_cast<int>(r), s, probability_from_s(s, n), outcomes[r].iterations,
                                 outcomes[r].evaluations});
    }
    std::size_t best = 0;
    for (std::size_t r = 1; r < restarts; ++r) {
        if (result.traces[r].s_value > result.traces[best].s_value) best = r;
    }
    result.best_restart = static_cast<int>(best);
    result.s_value = result.traces[best].s_value;
    result.probability = result.traces[best].probability;
    for (const Measurement &m : candidates[best]) result.measurements.push_back({upper_hemisphere(m.direction)});
    return result;
}

PolishResult polish(const std::vector<Measurement> &measurements, const OptimizerConfig &config) {
    config.validate();
    const int n = static_cast<int>(measurements.size());
    if (n < 1) throw std::invalid_argument("polish needs at least one axis");
    if (n > kMaxOptimizerLength) throw CostGuardError("polish is limited to n <= 12");
    const double start_probability = optimal_code_probability(measurements);
    if (n == 1) return {measurements, start_probability};

    // Orthonormal frame with e3 along axis 1 and axis 2 in the (e1, e3) plane.
    const Vec3 e3 = measurements[0].direction.vec();
    Vec3 e1 = measurements[1].direction.vec() - dot(measurements[1].direction.vec(), e3) * e3;
    if (norm(e1) < 1e-9) e1 = std::abs(e3.x) < 0.9 ? cross(e3, Vec3{1, 0, 0}) : cross(e3, Vec3{0, 1, 0});
    e1 = (1.0 / norm(e1)) * e1;
    const Vec3 e2 = cross(e3, e1);
    std::vector<Vec3> local;
    local.reserve(measurements.size());
    for (const Measurement &m : measurements) {
        const Vec3 &v = m.direction.vec();
        local.push_back({dot(e1, v), dot(e2, v), dot(e3, v)});
    }

    auto objective = [n](const Point &p) { return half_gray_sum(axes_from_params(p, n)); };
    const SearchOutcome found =
        nelder_mead(objective, params_from_axes(local), 0.1 * config.initial_step, config.tolerance, config.max_iterations);

    std::vector<Measurement> out;
    out.reserve(measurements.size());
    for (const Vec3 &v : axes_from_params(found.best, n)) {
        out.push_back({BlochVector::normalize(v.x * e1 + v.y * e2 + v.z * e3)});
    }
    const double p = optimal_code_probability(out);
    if (p < start_probability) return {measurements, start_probability};
    return {std::move(out), p};
}

}  // namespace qracsr
