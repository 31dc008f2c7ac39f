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

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace qracsr {

/// Fixed-length bit string of at most 64 bits. Bit i (0-based) is the
/// paper-style x_{i+1}; as an integer the string is little-endian, so x_1
/// is the lowest bit. The text form writes x_1 leftmost.
class BitString {
  public:
    static constexpr int kMaxLength = 64;

    /// Throws std::invalid_argument unless 1 <= length <= 64 and `bits`
    /// has no set bit at or above `length`.
    BitString(int length, std::uint64_t bits);

    /// Parses "x1x2...xn" (characters '0'/'1'); throws on anything else.
    static BitString from_string(std::string_view text);

    int size() const { return length_; }
    std::uint64_t bits() const { return bits_; }
    bool operator[](int index) const { return ((bits_ >> index) & 1u) != 0; }
    int weight() const { return std::popcount(bits_); }

    std::string to_string() const;

    friend bool operator==(const BitString &, const BitString &) = default;

  private:
    int length_;
    std::uint64_t bits_;
};

/// Text key for the integer-indexed string `bits` of the given length.
std::string bit_key(std::uint64_t bits, int length);

}  // namespace qracsr
