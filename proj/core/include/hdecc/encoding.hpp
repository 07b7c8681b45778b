// Copyright 2026 The hdecc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HDECC_ENCODING_HPP
#define HDECC_ENCODING_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hdecc/curve.hpp"
#include "hdecc/matrix.hpp"

namespace hdecc {

// Canonical encodings. A field element is 8 bytes big-endian (16 lowercase
// hex chars in text). A point is 1 tag byte (0x00 infinity, 0x04 affine)
// followed by x and y for affine points. A 2x2 field matrix is its four
// entries row-major, 32 bytes total.

inline constexpr std::uint8_t kPointTagInfinity = 0x00;
inline constexpr std::uint8_t kPointTagAffine = 0x04;

std::string to_hex16(std::uint64_t value);

/// Strict parse of exactly 16 lowercase hex chars; throws Malformed.
std::uint64_t parse_hex16(std::string_view text);

std::string bytes_to_hex(std::span<const std::uint8_t> bytes);

/// Strict lowercase hex of even length; throws Malformed.
std::vector<std::uint8_t> hex_to_bytes(std::string_view text);

void append_u64_be(std::vector<std::uint8_t>& out, std::uint64_t value);
std::uint64_t read_u64_be(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_field_element(const FieldElement& fe);

std::vector<std::uint8_t> encode_point(const CurvePoint& pt);
CurvePoint decode_point(const CurveParams& params,
                        std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_matrix(const FieldMatrix& m);
std::string matrix_to_hex(const FieldMatrix& m);

/// Strict parse of 64 lowercase hex chars into row-major entries; entries
/// must already be canonical residues mod p. Throws Malformed.
FieldMatrix matrix_from_hex(std::string_view text, Prime p);

}  // namespace hdecc

#endif  // HDECC_ENCODING_HPP
