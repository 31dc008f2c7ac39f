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

// Explicit codes, polyhedron vertex sets, great-circle arrangements and
// the algebraic description of encoding points.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qracsr/bitstring.hpp"
#include "qracsr/bloch.hpp"
#include "qracsr/qrac.hpp"

namespace qracsr {

struct NamedConstruction {
    std::string name;
    std::vector<Measurement> measurements;
    /// Human-readable closed form; empty when the value is only computed.
    std::string closed_form;
    std::optional<double> expected_probability;
};

/// qrac2, qrac3, qrac4, qrac5, qrac6, qrac9, sym4, sym6, sym9, sym15.
const std::vector<std::string> &construction_names();

/// Throws std::invalid_argument for an unknown name.
NamedConstruction named_construction(std::string_view name);

/// Measurements of the named construction with optimal encodings.
QracCode known_code(std::string_view name);

/// cube, octahedron, cuboctahedron, truncated_octahedron, truncated_cube,
/// small_rhombicuboctahedron, icosahedron, dodecahedron, icosidodecahedron.
const std::vector<std::string> &polyhedron_names();

/// Unit-normalized vertex list; throws std::invalid_argument when unknown.
std::vector<BlochVector> polyhedron_vertices(std::string_view name);

/// Set of distinct great circles, each given by a unit normal.
class GreatCircleArrangement {
  public:
    /// Throws std::invalid_argument when empty or when two normals are
    /// parallel or antiparallel within 1e-9.
    explicit GreatCircleArrangement(std::vector<BlochVector> normals);

    const std::vector<BlochVector> &normals() const { return normals_; }
    std::size_t size() const { return normals_.size(); }

  private:
    std::vector<BlochVector> normals_;
};

/// One circle per distinct measurement axis; repeated axes collapse.
GreatCircleArrangement arrangement_from_measurements(std::span<const Measurement> measurements);

/// Number of faces cut out on the sphere, from V - E + F = 2 with
/// intersection points merged within 1e-9.
int count_sphere_regions(const GreatCircleArrangement &arrangement);

/// Integer polynomial in beta; coefficients[k] multiplies beta^k.
struct PolynomialFactor {
    std::vector<long long> coefficients;
    int multiplicity = 1;
};

using FactoredPolynomial = std::vector<PolynomialFactor>;

int degree(const FactoredPolynomial &poly);

/// The published polynomial for qrac3, qrac4, qrac5, qrac6, qrac9 or sym4.
FactoredPolynomial encoding_polynomial(std::string_view name);

/// True iff the beta coefficient of every non-neutral encoding state of
/// the named code is a root of some factor, with residual below 1e-6 of
/// the polynomial's magnitude scale at |beta|.
bool encoding_polynomial_check(std::string_view name, const FactoredPolynomial &poly);
bool encoding_polynomial_check(std::string_view name, std::span<const long long> coefficients);

enum class PolyhedronTag { Cube, Octahedron, TruncatedOctahedron, TruncatedCube, SmallRhombicuboctahedron };

std::string_view to_string(PolyhedronTag tag);

/// Vertex type of the encoding point for qrac6 or qrac9 inputs, from the
/// bit pattern alone.
PolyhedronTag classify_string(std::string_view name, const BitString &x);

}  // namespace qracsr
