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

#ifndef HDECC_PROTOCOL_HPP
#define HDECC_PROTOCOL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hdecc/matkex.hpp"

namespace hdecc {

// Params file (JSON, all field elements as 16 lowercase hex chars):
//
//   {
//     "version": 1,                      // 1 = SHA-256 params digest
//     "p": "...", "a": [4x], "b": "...", "c": [4x],
//     "G": [4x hex, row-major], "K": [4 decimal orders],
//     "chain": { "start_x": "...", "start_y": "...", "counts": [3 decimal] }
//   }
//
// Loading re-runs the generator chain and requires it to reproduce G and K
// exactly, so a params file cannot smuggle in a generator set that its own
// public chain does not produce.

struct ChainConfig {
  std::uint64_t start_x = 0;
  std::uint64_t start_y = 0;
  std::array<std::uint64_t, 3> counts{1, 1, 1};

  friend bool operator==(const ChainConfig&, const ChainConfig&) = default;
};

struct ParamsFile {
  int version = 1;
  std::uint64_t p = 0;
  std::array<std::uint64_t, 4> a{};
  std::uint64_t b = 0;
  std::array<std::uint64_t, 4> c{};
  std::array<std::uint64_t, 4> generator_x{};  // G, row-major
  std::array<std::uint64_t, 4> orders{};       // K
  ChainConfig chain;

  friend bool operator==(const ParamsFile&, const ParamsFile&) = default;
};

/// Canonical JSON text (stable key order, lowercase hex).
std::string params_to_json(const ParamsFile& file);

/// Strict parse: exact key sets, canonical hex, decimal integers in range.
/// Throws Malformed on any violation.
ParamsFile params_from_json(const std::string& text);

/// Assembles the file record from a built session.
ParamsFile make_params_file(const SurfaceParams& sp, const ChainSpec& spec,
                            const GeneratorSet& gens);
ParamsFile make_params_file(const SessionParams& session);

/// Validates the record and rebuilds the session: p prime, residues
/// canonical, all four projected curves non-degenerate, chain reproduces
/// G and K exactly.
SessionParams load_session(const ParamsFile& file);

/// SHA-256 over the canonical params serialization (independent of JSON
/// formatting). Both peers must agree on this before exchanging tokens.
std::array<std::uint8_t, 32> params_digest(const ParamsFile& file);

ParamsFile read_params_file(const std::string& path);
void write_params_file(const std::string& path, const ParamsFile& file);

// Wire format. Every message is one length-framed record:
//
//   frame   := u32 big-endian payload length || payload
//   payload := "type=" ("hello"|"token"|"bye") "\n"
//              "side=" ("initiator"|"responder") "\n"
//              "params_digest=" 64 lowercase hex "\n"
//            [ "matrix=" 4 x 16 lowercase hex, comma-separated "\n" ]
//
// The matrix line is present exactly when type == token. Decoding is
// strict: fixed line order, no unknown or duplicate fields, canonical
// lowercase hex only, no trailing bytes after the frame.

enum class MessageType { hello, token, bye };

struct ProtocolMessage {
  MessageType type = MessageType::hello;
  Side side = Side::initiator;
  std::array<std::uint8_t, 32> params_digest{};
  std::optional<std::array<std::uint64_t, 4>> matrix;  // row-major

  friend bool operator==(const ProtocolMessage&,
                         const ProtocolMessage&) = default;
};

std::vector<std::uint8_t> encode_message(const ProtocolMessage& msg);

/// Decodes one full frame. Throws Truncated when the declared length
/// exceeds the available bytes, Malformed on any structural violation.
ProtocolMessage decode_message(std::span<const std::uint8_t> bytes);

/// Same, but additionally throws DigestMismatch when the message's
/// params_digest differs from the expected one.
ProtocolMessage decode_message(std::span<const std::uint8_t> bytes,
                               const std::array<std::uint8_t, 32>& expected);

const char* message_type_name(MessageType type) noexcept;
const char* side_name(Side side) noexcept;

}  // namespace hdecc

#endif  // HDECC_PROTOCOL_HPP
