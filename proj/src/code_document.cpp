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

#include "qracsr/code_document.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qracsr/bitstring.hpp"
#include "qracsr/constructions.hpp"

namespace qracsr {
namespace {

using Json = nlohmann::ordered_json;
// Loading does not need key order, and the sorted map avoids linear key
// lookups on large documents.
using LoadJson = nlohmann::json;

Json vec_json(const Vec3 &v) { return Json::array({v.x, v.y, v.z}); }

BlochVector load_vector(const LoadJson &j, const std::string &where) {
    if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() || !j[2].is_number()) {
        throw std::invalid_argument(where + ": expected an array of three numbers");
    }
    const Vec3 v{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
    const double len = norm(v);
    if (!std::isfinite(len) || std::abs(len - 1.0) > kLoadNormTolerance) {
        throw std::invalid_argument(where + ": vector is not unit length");
    }
    if (std::abs(len - 1.0) <= kUnitTolerance) return BlochVector::from_unit(v);
    return BlochVector::normalize(v);
}

LoadJson parse(std::string_view text) {
    try {
        return LoadJson::parse(text.begin(), text.end());
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

std::string to_json(const CodeDocument &doc) {
    const QracCode &code = doc.code;
    Json j;
    j["schema"] = std::string(kCodeSchema);
    j["n"] = code.n();
    Json ms = Json::array();
    for (const Measurement &m : code.measurements()) ms.push_back(vec_json(m.direction.vec()));
    j["measurements"] = std::move(ms);
    Json enc = Json::object();
    auto &entries = enc.get_ref<Json::object_t &>();
    entries.reserve(code.input_count());
    // Keys are distinct, so append without the ordered map's linear lookup.
    for (std::uint64_t x = 0; x < code.input_count(); ++x) {
        entries.std::vector<Json::object_t::value_type>::emplace_back(bit_key(x, code.n()),
                                                                    vec_json(code.encoding(x).vec()));
    }
    j["encodings"] = std::move(enc);
    if (doc.metadata.name || doc.metadata.expected_probability) {
        Json meta = Json::object();
        if (doc.metadata.name) meta["name"] = *doc.metadata.name;
        if (doc.metadata.expected_probability) meta["expected_probability"] = *doc.metadata.expected_probability;
        j["metadata"] = std::move(meta);
    }
    return j.dump(2) + "\n";
}

CodeDocument code_document_from_json(std::string_view text) {
    const LoadJson j = parse(text);
    if (!j.is_object()) throw std::invalid_argument("code document must be a JSON object");
    if (!j.contains("schema") || j["schema"] != std::string(kCodeSchema)) {
        throw std::invalid_argument("unsupported or missing schema (expected qracsr.code/1)");
    }
    if (!j.contains("n") || !j["n"].is_number_integer()) throw std::invalid_argument("missing integer n");
    const int n = j["n"].get<int>();
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (n > kMaxCodeLength) throw std::invalid_argument("n exceeds the supported code length");
    if (!j.contains("measurements") || !j["measurements"].is_array() ||
        j["measurements"].size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("measurements must be an array of n vectors");
    }
    std::vector<Measurement> ms;
    for (std::size_t i = 0; i < j["measurements"].size(); ++i) {
        ms.push_back({load_vector(j["measurements"][i], "measurements[" + std::to_string(i) + "]")});
    }
    const std::uint64_t count = std::uint64_t{1} << n;
    if (!j.contains("encodings") || !j["encodings"].is_object() || j["encodings"].size() != count) {
        throw std::invalid_argument("encodings must map all 2^n input strings");
    }
    std::vector<std::optional<BlochVector>> slots(count);
    for (const auto &[key, value] : j["encodings"].items()) {
        if (key.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("encoding key has wrong length: " + key);
        const BitString x = BitString::from_string(key);
        if (slots[x.bits()]) throw std::invalid_argument("duplicate encoding key: " + key);
        slots[x.bits()] = load_vector(value, "encodings[" + key + "]");
    }
    std::vector<BlochVector> enc;
    enc.reserve(count);
    for (const auto &s : slots) enc.push_back(*s);
    CodeDocument doc{QracCode(std::move(ms), std::move(enc)), {}};
    if (j.contains("metadata")) {
        const LoadJson &meta = j["metadata"];
        if (!meta.is_object()) throw std::invalid_argument("metadata must be an object");
        if (meta.contains("name")) {
            if (!meta["name"].is_string()) throw std::invalid_argument("metadata.name must be a string");
            doc.metadata.name = meta["name"].get<std::string>();
        }
        if (meta.contains("expected_probability")) {
            if (!meta["expected_probability"].is_number()) {
                throw std::invalid_argument("metadata.expected_probability must be a number");
            }
            doc.metadata.expected_probability = meta["expected_probability"].get<double>();
        }
    }
    return doc;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CodeDocument read_code_document(const std::string &path) { return code_document_from_json(read_text_file(path)); }

void write_code_document(const std::string &path, const CodeDocument &doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << to_json(doc);
    if (!out) throw std::invalid_argument("failed writing " + path);
}

std::string geometry_json(const QracCode &code) {
    Json j;
    Json circles = Json::array();
    const GreatCircleArrangement arrangement = arrangement_from_measurements(code.measurements());
    for (const BlochVector &b : arrangement.normals()) {
        circles.push_back(vec_json(b.vec()));
    }
    j["circles"] = std::move(circles);
    Json points = Json::array();
    for (int i = 0; i < code.n(); ++i) {
        points.push_back({{"label", "v" + std::to_string(i + 1)},
                          {"vec", vec_json(code.measurements()[static_cast<std::size_t>(i)].direction.vec())},
                          {"kind", "measurement"}});
    }
    for (std::uint64_t x = 0; x < code.input_count(); ++x) {
        points.push_back({{"label", bit_key(x, code.n())}, {"vec", vec_json(code.encoding(x).vec())}, {"kind", "encoding"}});
    }
    j["points"] = std::move(points);
    return j.dump(2) + "\n";
}

std::vector<BlochVector> circles_from_json(std::string_view text) {
    const LoadJson j = parse(text);
    const LoadJson *list = &j;
    if (j.is_object()) {
        if (!j.contains("circles")) throw std::invalid_argument("expected a \"circles\" array");
        list = &j["circles"];
    }
    if (!list->is_array() || list->empty()) throw std::invalid_argument("circles must be a non-empty array");
    std::vector<BlochVector> out;
    for (std::size_t i = 0; i < list->size(); ++i) {
        const LoadJson &v = (*list)[i];
        if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() || !v[2].is_number()) {
            throw std::invalid_argument("circles[" + std::to_string(i) + "]: expected three numbers");
        }
        // Circle normals only need a direction.
        out.push_back(BlochVector::normalize({v[0].get<double>(), v[1].get<double>(), v[2].get<double>()}));
    }
    return out;
}

}  // namespace qracsr
