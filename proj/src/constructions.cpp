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

#include "qracsr/constructions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace qracsr {
namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;

constexpr double kCircleTolerance = 1e-9;

Measurement axis(double x, double y, double z) { return {BlochVector::normalize({x, y, z})}; }

std::vector<Measurement> coordinate_axes() { return {axis(1, 0, 0), axis(0, 1, 0), axis(0, 0, 1)}; }

std::vector<Measurement> cuboctahedron_axes() {
    return {axis(0, 1, 1), axis(0, -1, 1), axis(1, 0, 1), axis(1, 0, -1), axis(1, 1, 0), axis(-1, 1, 0)};
}

std::vector<Measurement> icosahedron_axes() {
    const double t = kGolden;
    return {axis(0, t, 1), axis(0, t, -1), axis(1, 0, t), axis(-1, 0, t), axis(t, 1, 0), axis(t, -1, 0)};
}

std::vector<Measurement> icosidodecahedron_axes() {
    std::vector<Measurement> out = coordinate_axes();
    const double t = kGolden;
    const std::array<Vec3, 3> bases{{{1, t, t * t}, {t * t, 1, t}, {t, t * t, 1}}};
    for (const Vec3 &b : bases) {
        for (double s1 : {1.0, -1.0}) {
            for (double s2 : {1.0, -1.0}) out.push_back(axis(b.x, s1 * b.y, s2 * b.z));
        }
    }
    return out;
}

template <typename T>
std::vector<T> concat(std::vector<T> a, const std::vector<T> &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// All coordinate permutations (or only the cyclic ones) with every sign
// choice, normalized and deduplicated.
std::vector<BlochVector> expand(const Vec3 &base, bool all_permutations) {
    std::vector<std::array<double, 3>> orders{{base.x, base.y, base.z}, {base.y, base.z, base.x},
                                              {base.z, base.x, base.y}};
    if (all_permutations) {
        orders.push_back({base.x, base.z, base.y});
        orders.push_back({base.z, base.y, base.x});
        orders.push_back({base.y, base.x, base.z});
    }
    std::vector<BlochVector> out;
    for (const auto &o : orders) {
        for (int signs = 0; signs < 8; ++signs) {
            const Vec3 v{(signs & 1) ? -o[0] : o[0], (signs & 2) ? -o[1] : o[1], (signs & 4) ? -o[2] : o[2]};
            const BlochVector b = BlochVector::normalize(v);
            const bool seen = std::any_of(out.begin(), out.end(),
                                          [&](const BlochVector &e) { return norm(e.vec() - b.vec()) < 1e-12; });
            if (!seen) out.push_back(b);
        }
    }
    return out;
}

std::complex<double> horner(const std::vector<long long> &c, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + static_cast<double>(*it);
    return acc;
}

double magnitude_scale(const std::vector<long long> &c, double r) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(static_cast<double>(*it));
    return acc;
}

bool is_root(const PolynomialFactor &f, std::complex<double> beta) {
    const double value = std::abs(horner(f.coefficients, beta));
    if (value == 0.0) return true;
    const double scale = magnitude_scale(f.coefficients, std::abs(beta));
    return scale > 0.0 && value < 1e-6 * scale;
}

// Sparse builder: pairs of (coefficient, power).
PolynomialFactor factor(std::initializer_list<std::pair<long long, int>> terms, int multiplicity = 1) {
    int top = 0;
    for (const auto &t : terms) top = std::max(top, t.second);
    PolynomialFactor f;
    f.coefficients.assign(static_cast<std::size_t>(top) + 1, 0);
    for (const auto &t : terms) f.coefficients[static_cast<std::size_t>(t.second)] += t.first;
    f.multiplicity = multiplicity;
    return f;
}

bool matches(std::string_view text, std::string_view pattern) {
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (pattern[i] != '*' && pattern[i] != text[i]) return false;
    }
    return true;
}

}  // namespace

const std::vector<std::string> &construction_names() {
    static const std::vector<std::string> names{"qrac2", "qrac3", "qrac4", "qrac5", "qrac6",
                                                "qrac9", "sym4",  "sym6",  "sym9",  "sym15"};
    return names;
}

NamedConstruction named_construction(std::string_view name) {
    NamedConstruction c;
    c.name = std::string(name);
    if (name == "qrac2") {
        c.measurements = {axis(1, 0, 0), axis(0, 1, 0)};
        c.closed_form = "1/2 + 1/(2 sqrt(2))";
        c.expected_probability = 0.5 + 1.0 / (2.0 * kSqrt2);
    } else if (name == "qrac3") {
        c.measurements = coordinate_axes();
        c.closed_form = "1/2 + 1/(2 sqrt(3))";
        c.expected_probability = 0.5 + 1.0 / (2.0 * kSqrt3);
    } else if (name == "qrac4") {
        c.measurements = concat(coordinate_axes(), {axis(0, 0, 1)});
        c.closed_form = "1/2 + (1 + sqrt(3))/(8 sqrt(2))";
        c.expected_probability = 0.5 + (1.0 + kSqrt3) / (8.0 * kSqrt2);
    } else if (name == "qrac5") {
        c.measurements = concat(coordinate_axes(), {axis(1, 1, 0), axis(-1, 1, 0)});
        c.closed_form = "1/2 + sqrt(2 (5 + sqrt(17)))/20";
        c.expected_probability = 0.5 + std::sqrt(2.0 * (5.0 + std::sqrt(17.0))) / 20.0;
    } else if (name == "qrac6") {
        c.measurements = cuboctahedron_axes();
        c.closed_form = "1/2 + (2 + sqrt(3) + sqrt(15))/(16 sqrt(6))";
        c.expected_probability = 0.5 + (2.0 + kSqrt3 + std::sqrt(15.0)) / (16.0 * std::sqrt(6.0));
    } else if (name == "qrac9") {
        c.measurements = concat(concat(coordinate_axes(), coordinate_axes()), coordinate_axes());
        c.closed_form = "1/2 + (10 sqrt(3) + 9 sqrt(11) + 3 sqrt(19))/384";
        c.expected_probability =
            0.5 + (10.0 * kSqrt3 + 9.0 * std::sqrt(11.0) + 3.0 * std::sqrt(19.0)) / 384.0;
    } else if (name == "sym4") {
        c.measurements = {axis(1, -1, -1), axis(-1, 1, -1), axis(-1, -1, 1), axis(1, 1, 1)};
        c.closed_form = "1/2 + (2 + sqrt(3))/16";
        c.expected_probability = 0.5 + (2.0 + kSqrt3) / 16.0;
    } else if (name == "sym6") {
        c.measurements = icosahedron_axes();
        c.closed_form = "1/2 + sqrt(5)/32 + sqrt(75 + 30 sqrt(5))/96";
        c.expected_probability = 0.5 + std::sqrt(5.0) / 32.0 + std::sqrt(75.0 + 30.0 * std::sqrt(5.0)) / 96.0;
    } else if (name == "sym9") {
        c.measurements = concat(coordinate_axes(), cuboctahedron_axes());
    } else if (name == "sym15") {
        c.measurements = icosidodecahedron_axes();
    } else {
        throw std::invalid_argument("unknown construction: " + std::string(name));
    }
    return c;
}

QracCode known_code(std::string_view name) { return make_optimal_code(named_construction(name).measurements); }

const std::vector<std::string> &polyhedron_names() {
    static const std::vector<std::string> names{
        "cube",        "octahedron",   "cuboctahedron", "truncated_octahedron", "truncated_cube",
        "small_rhombicuboctahedron", "icosahedron", "dodecahedron", "icosidodecahedron"};
    return names;
}

std::vector<BlochVector> polyhedron_vertices(std::string_view name) {
    const double t = kGolden;
    if (name == "cube") return expand({1, 1, 1}, false);
    if (name == "octahedron") return expand({1, 0, 0}, false);
    if (name == "cuboctahedron") return expand({0, 1, 1}, false);
    if (name == "truncated_octahedron") return expand({0, 1, 2}, true);
    if (name == "truncated_cube") return expand({1, 3, 3}, false);
    if (name == "small_rhombicuboctahedron") return expand({3, 1, 1}, false);
    if (name == "icosahedron") return expand({0, t, 1}, false);
    if (name == "dodecahedron") return concat(expand({1, 1, 1}, false), expand({0, 1.0 / t, t}, false));
    if (name == "icosidodecahedron") return concat(expand({1, 0, 0}, false), expand({1, t, t * t}, false));
    throw std::invalid_argument("unknown polyhedron: " + std::string(name));
}

GreatCircleArrangement::GreatCircleArrangement(std::vector<BlochVector> normals) : normals_(std::move(normals)) {
    if (normals_.empty()) throw std::invalid_argument("an arrangement needs at least one circle");
    for (std::size_t i = 0; i < normals_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (norm(cross(normals_[i].vec(), normals_[j].vec())) < kCircleTolerance) {
                throw std::invalid_argument("coincident great circles");
            }
        }
    }
}

GreatCircleArrangement arrangement_from_measurements(std::span<const Measurement> measurements) {
    std::vector<BlochVector> normals;
    for (const Measurement &m : measurements) {
        const bool repeated = std::any_of(normals.begin(), normals.end(), [&](const BlochVector &b) {
            return norm(cross(b.vec(), m.direction.vec())) < kCircleTolerance;
        });
        if (!repeated) normals.push_back(m.direction);
    }
    return GreatCircleArrangement(std::move(normals));
}

int count_sphere_regions(const GreatCircleArrangement &arrangement) {
    const auto &normals = arrangement.normals();
    if (normals.size() == 1) return 2;
    std::vector<Vec3> vertices;
    auto add_vertex = [&](const Vec3 &p) {
        for (const Vec3 &v : vertices) {
            if (norm(v - p) < kCircleTolerance) return;
        }
        vertices.push_back(p);
    };
    for (std::size_t i = 0; i < normals.size(); ++i) {
        for (std::size_t j = i + 1; j < normals.size(); ++j) {
            const Vec3 c = cross(normals[i].vec(), normals[j].vec());
            const Vec3 p = (1.0 / norm(c)) * c;
            add_vertex(p);
            add_vertex(-p);
        }
    }
    // Each circle is split into as many arcs as it carries vertices.
    long edges = 0;
    for (const BlochVector &n : normals) {
        edges += std::count_if(vertices.begin(), vertices.end(),
                               [&](const Vec3 &v) { return std::abs(dot(n.vec(), v)) < kCircleTolerance; });
    }
    return static_cast<int>(edges - static_cast<long>(vertices.size()) + 2);
}

int degree(const FactoredPolynomial &poly) {
    int total = 0;
    for (const PolynomialFactor &f : poly) total += (static_cast<int>(f.coefficients.size()) - 1) * f.multiplicity;
    return total;
}

FactoredPolynomial encoding_polynomial(std::string_view name) {
    const PolynomialFactor cube = factor({{36, 8}, {24, 4}, {1, 0}});
    if (name == "qrac3") return {cube};
    if (name == "qrac4") return {factor({{2304, 16}, {3072, 12}, {1120, 8}, {128, 4}, {1, 0}})};
    if (name == "qrac5") return {factor({{1336336, 32}, {961792, 24}, {151432, 16}, {1600, 8}, {1, 0}})};
    if (name == "qrac6") {
        PolynomialFactor cube2 = cube;
        cube2.multiplicity = 2;
        return {factor({{1, 1}}, 4),
                factor({{1, 1}, {-1, 0}}, 4),
                factor({{4, 4}, {-1, 0}}, 4),
                cube2,
                factor({{25, 8}, {-15, 4}, {1, 0}}),
                factor({{400, 8}, {-360, 4}, {1, 0}}),
                factor({{400, 8}, {56, 4}, {25, 0}})};
    }
    if (name == "qrac9") {
        PolynomialFactor cube28 = cube;
        cube28.multiplicity = 28;
        return {cube28,
                factor({{1444, 8}, {760, 4}, {81, 0}}, 3),
                factor({{484, 8}, {440, 4}, {1, 0}}, 9),
                factor({{52128400, 16}, {-21509824, 12}, {26780424, 8}, {-372400, 4}, {15625, 0}}, 3),
                factor({{5856400, 16}, {-1788864, 12}, {1232264, 8}, {-92400, 4}, {15625, 0}}, 9)};
    }
    if (name == "sym4") return {factor({{1, 1}}), factor({{1, 1}, {-1, 0}}), factor({{4, 4}, {-1, 0}}), cube};
    throw std::invalid_argument("no encoding polynomial for: " + std::string(name));
}

bool encoding_polynomial_check(std::string_view name, const FactoredPolynomial &poly) {
    if (poly.empty()) return false;
    const QracCode code = known_code(name);
    const CodeReport report = evaluate(code);
    for (std::uint64_t x = 0; x < code.input_count(); ++x) {
        if (std::binary_search(report.neutral_inputs.begin(), report.neutral_inputs.end(), x)) continue;
        const std::complex<double> beta = beta_coefficient(state_from_bloch(code.encoding(x)));
        const bool root = std::any_of(poly.begin(), poly.end(), [&](const PolynomialFactor &f) { return is_root(f, beta); });
        if (!root) return false;
    }
    return true;
}

bool encoding_polynomial_check(std::string_view name, std::span<const long long> coefficients) {
    PolynomialFactor f;
    f.coefficients.assign(coefficients.begin(), coefficients.end());
    return encoding_polynomial_check(name, FactoredPolynomial{f});
}

std::string_view to_string(PolyhedronTag tag) {
    switch (tag) {
        case PolyhedronTag::Cube: return "cube";
        case PolyhedronTag::Octahedron: return "octahedron";
        case PolyhedronTag::TruncatedOctahedron: return "truncated_octahedron";
        case PolyhedronTag::TruncatedCube: return "truncated_cube";
        case PolyhedronTag::SmallRhombicuboctahedron: return "small_rhombicuboctahedron";
    }
    return "unknown";
}

PolyhedronTag classify_string(std::string_view name, const BitString &x) {
    if (name == "qrac6") {
        if (x.size() != 6) throw std::invalid_argument("qrac6 inputs have 6 bits");
        const int turns = (x[0] != x[1]) + (x[2] != x[3]) + (x[4] != x[5]);
        if (turns == 0 || turns == 3) return PolyhedronTag::Cube;
        const std::string text = x.to_string();
        static constexpr std::array<std::string_view, 6> kTruncated{"**1110", "**0001", "10**11",
                                                                    "01**00", "1110**", "0001**"};
        static constexpr std::array<std::string_view, 6> kOctahedral{"**1101", "**0010", "01**11",
                                                                     "10**00", "1101**", "0010**"};
        for (std::string_view p : kTruncated) {
            if (matches(text, p)) return PolyhedronTag::TruncatedOctahedron;
        }
        for (std::string_view p : kOctahedral) {
            if (matches(text, p)) return PolyhedronTag::Octahedron;
        }
        throw std::logic_error("qrac6 input matches no pattern: " + text);
    }
    if (name == "qrac9") {
        if (x.size() != 9) throw std::invalid_argument("qrac9 inputs have 9 bits");
        // One count per axis: does the triple measured along it disagree?
        int mixed = 0;
        for (int a = 0; a < 3; ++a) {
            mixed += !(x[a] == x[a + 3] && x[a + 3] == x[a + 6]);
        }
        if (mixed == 1) return PolyhedronTag::TruncatedCube;
        if (mixed == 2) return PolyhedronTag::SmallRhombicuboctahedron;
        return PolyhedronTag::Cube;
    }
    throw std::invalid_argument("classification is defined for qrac6 and qrac9 only");
}

}  // namespace qracsr
