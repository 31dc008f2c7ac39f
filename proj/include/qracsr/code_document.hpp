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

// JSON exchange format for codes, plus plot-ready geometry export.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qracsr/qrac.hpp"

namespace qracsr {

inline constexpr std::string_view kCodeSchema = "qracsr.code/1";

/// Vectors further than this from unit length are rejected on load.
inline constexpr double kLoadNormTolerance = 1e-9;

struct CodeMetadata {
    std::optional<std::string> name;
    std::optional<double> expected_probability;
};

struct CodeDocument {
    QracCode code;
    CodeMetadata metadata;
};

/// Serializes with shortest round-trip doubles. Encoding keys are the
/// text form of each input, x_1 leftmost.
std::string to_json(const CodeDocument &doc);

/// Parses and re-validates a document. Throws std::invalid_argument on
/// malformed input, missing keys, wrong counts or non-unit vectors.
CodeDocument code_document_from_json(std::string_view text);

CodeDocument read_code_document(const std::string &path);
void write_code_document(const std::string &path, const CodeDocument &doc);

/// {"circles": [[x,y,z], ...], "points": [{"label", "vec", "kind"}, ...]}
/// with one circle per distinct measurement axis.
std::string geometry_json(const QracCode &code);

/// Reads the "circles" array of a geometry document (or a bare array of
/// normals) as circle normals.
std::vector<BlochVector> circles_from_json(std::string_view text);

std::string read_text_file(const std::string &path);

}  // namespace qracsr
