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

#include "qracsr/bitstring.hpp"

#include <stdexcept>

namespace qracsr {

BitString::BitString(int length, std::uint64_t bits) : length_(length), bits_(bits) {
    if (length < 1 || length > kMaxLength) {
        throw std::invalid_argument("bit string length must be in 1..64");
    }
    if (length < 64 && (bits >> length) != 0) {
        throw std::invalid_argument("bit string value has bits beyond its length");
    }
}

BitString BitString::from_string(std::string_view text) {
    if (text.empty() || text.size() > static_cast<std::size_t>(kMaxLength)) {
        throw std::invalid_argument("bit string length must be in 1..64");
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            bits |= std::uint64_t{1} << i;
        } else if (text[i] != '0') {
            throw std::invalid_argument("bit string may contain only '0' and '1'");
        }
    }
    return BitString(static_cast<int>(text.size()), bits);
}

std::string BitString::to_string() const { return bit_key(bits_, length_); }

std::string bit_key(std::uint64_t bits, int length) {
    std::string out(static_cast<std::size_t>(length), '0');
    for (int i = 0; i < length; ++i) {
        if ((bits >> i) & 1u) out[static_cast<std::size_t>(i)] = '1';
    }
    return out;
}

}  // namespace qracsr
