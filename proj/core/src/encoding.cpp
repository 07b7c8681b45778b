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

#include "hdecc/encoding.hpp"

namespace hdecc {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;  // uppercase and everything else is non-canonical
}

}  // namespace

std::string to_hex16(std::uint64_t value) {
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = kHexDigits[value & 0xf];
    value >>= 4;
  }
  return out;
}

std::uint64_t parse_hex16(std::string_view text) {
  if (text.size() != 16) {
    throw Error(Errc::malformed,
                "expected 16 hex chars, got " + std::to_string(text.size()));
  }
  std::uint64_t value = 0;
  for (char c : text) {
    int nib = hex_nibble(c);
    if (nib < 0) {
      throw Error(Errc::malformed,
                  std::string("non-canonical hex character '") + c + "'");
    }
    value = (value << 4) | std::uint64_t(nib);
  }
  return value;
}

std::string bytes_to_hex(std::span<const std::uint8_t> bytes) {
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kHexDigits[b >> 4]);
    out.push_back(kHexDigits[b & 0xf]);
  }
  return out;
}

std::vector<std::uint8_t> hex_to_bytes(std::string_view text) {
  if (text.size() % 2 != 0) {
    throw Error(Errc::malformed, "hex string has odd length");
  }
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 2);
  for (std::size_t i = 0; i < text.size(); i += 2) {
    int hi = hex_nibble(text[i]);
    int lo = hex_nibble(text[i + 1]);
    if (hi < 0 || lo < 0) {
      throw Error(Errc::malformed, "non-canonical hex character");
    }
    out.push_back(std::uint8_t((hi << 4) | lo));
  }
  return out;
}

void append_u64_be(std::vector<std::uint8_t>& out, std::uint64_t value) {
  for (int i = 7; i >= 0; --i) {
    out.push_back(std::uint8_t(value >> (8 * i)));
  }
}

std::uint64_t read_u64_be(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 8) {
    throw Error(Errc::truncated, "need 8 bytes for a field element");
  }
  std::uint64_t value = 0;
  for (int i = 0; i < 8; ++i) value = (value << 8) | bytes[i];
  return value;
}

std::vector<std::uint8_t> encode_field_element(const FieldElement& fe) {
  std::vector<std::uint8_t> out;
  append_u64_be(out, fe.value());
  return out;
}

std::vector<std::uint8_t> encode_point(const CurvePoint& pt) {
  std::vector<std::uint8_t> out;
  if (pt.is_infinity()) {
    out.push_back(kPointTagInfinity);
    return out;
  }
  out.push_back(kPointTagAffine);
  append_u64_be(out, pt.x().value());
  append_u64_be(out, pt.y().value());
  return out;
}

CurvePoint decode_point(const CurveParams& params,
                        std::span<const std::uint8_t> bytes) {
  if (bytes.empty()) {
    throw Error(Errc::truncated, "empty point encoding");
  }
  if (bytes[0] == kPointTagInfinity) {
    if (bytes.size() != 1) {
      throw Error(Errc::malformed, "infinity encoding carries extra bytes");
    }
    return CurvePoint::infinity(params);
  }
  if (bytes[0] != kPointTagAffine) {
    throw Error(Errc::malformed, "unknown point tag");
  }
  if (bytes.size() < 17) {
    throw Error(Errc::truncated, "affine point needs 17 bytes");
  }
  if (bytes.size() > 17) {
    throw Error(Errc::malformed, "affine encoding carries extra bytes");
  }
  std::uint64_t x = read_u64_be(bytes.subspan(1, 8));
  std::uint64_t y = read_u64_be(bytes.subspan(9, 8));
  std::uint64_t p = params.p.value();
  if (x >= p || y >= p) {
    throw Error(Errc::malformed, "coordinate is not a canonical residue");
  }
  return CurvePoint::affine(params, FieldElement(x, params.p),
                            FieldElement(y, params.p));
}

std::vector<std::uint8_t> encode_matrix(const FieldMatrix& m) {
  std::vector<std::uint8_t> out;
  out.reserve(32);
  for (const auto& e : m.entries()) append_u64_be(out, e.value());
  return out;
}

std::string matrix_to_hex(const FieldMatrix& m) {
  std::string out;
  for (const auto& e : m.entries()) out += to_hex16(e.value());
  return out;
}

FieldMatrix matrix_from_hex(std::string_view text, Prime p) {
  if (text.size() != 64) {
    throw Error(Errc::malformed, "matrix hex must be 64 chars");
  }
  std::array<std::uint64_t, 4> values{};
  for (int i = 0; i < 4; ++i) {
    values[i] = parse_hex16(text.substr(16 * std::size_t(i), 16));
    if (values[i] >= p.value()) {
      throw Error(Errc::malformed, "matrix entry is not a canonical residue");
    }
  }
  return FieldMatrix::from_values(values, p);
}

}  // namespace hdecc
