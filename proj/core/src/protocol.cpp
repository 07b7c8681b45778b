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

#include "hdecc/protocol.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hdecc/encoding.hpp"
#include "hdecc/sha256.hpp"

namespace hdecc {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxFrameLen = 4096;  // far above any legal payload

std::array<std::uint64_t, 4> parse_hex_quad(const json& arr,
                                            const std::string& what) {
  if (!arr.is_array() || arr.size() != 4) {
    throw Error(Errc::malformed, what + " must be an array of 4 hex strings");
  }
  std::array<std::uint64_t, 4> out{};
  for (int i = 0; i < 4; ++i) {
    if (!arr[i].is_string()) {
      throw Error(Errc::malformed, what + "[" + std::to_string(i) +
                                       "] must be a hex string");
    }
    out[i] = parse_hex16(arr[i].get<std::string>());
  }
  return out;
}

std::uint64_t parse_hex_field(const json& v, const std::string& what) {
  if (!v.is_string()) {
    throw Error(Errc::malformed, what + " must be a hex string");
  }
  return parse_hex16(v.get<std::string>());
}

std::uint64_t parse_decimal(const json& v, const std::string& what) {
  if (!v.is_number_unsigned()) {
    throw Error(Errc::malformed, what + " must be an unsigned integer");
  }
  return v.get<std::uint64_t>();
}

void require_keys(const json& obj, std::initializer_list<const char*> keys,
                  const std::string& what) {
  if (!obj.is_object()) {
    throw Error(Errc::malformed, what + " must be an object");
  }
  for (const char* key : keys) {
    if (!obj.contains(key)) {
      throw Error(Errc::malformed, what + " is missing key '" + key + "'");
    }
  }
  if (obj.size() != keys.size()) {
    throw Error(Errc::malformed, what + " carries unknown keys");
  }
}

}  // namespace

std::string params_to_json(const ParamsFile& file) {
  json j;
  j["version"] = file.version;
  j["p"] = to_hex16(file.p);
  j["a"] = {to_hex16(file.a[0]), to_hex16(file.a[1]), to_hex16(file.a[2]),
            to_hex16(file.a[3])};
  j["b"] = to_hex16(file.b);
  j["c"] = {to_hex16(file.c[0]), to_hex16(file.c[1]), to_hex16(file.c[2]),
            to_hex16(file.c[3])};
  j["G"] = {to_hex16(file.generator_x[0]), to_hex16(file.generator_x[1]),
            to_hex16(file.generator_x[2]), to_hex16(file.generator_x[3])};
  j["K"] = file.orders;
  j["chain"] = {{"start_x", to_hex16(file.chain.start_x)},
                {"start_y", to_hex16(file.chain.start_y)},
                {"counts", file.chain.counts}};
  return j.dump(2) + "\n";
}

ParamsFile params_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::malformed, std::string("params JSON: ") + e.what());
  }
  require_keys(j, {"version", "p", "a", "b", "c", "G", "K", "chain"},
               "params file");
  ParamsFile file;
  if (!j["version"].is_number_integer()) {
    throw Error(Errc::malformed, "version must be an integer");
  }
  file.version = j["version"].get<int>();
  if (file.version != 1) {
    throw Error(Errc::malformed,
                "unsupported params version " + std::to_string(file.version));
  }
  file.p = parse_hex_field(j["p"], "p");
  file.a = parse_hex_quad(j["a"], "a");
  file.b = parse_hex_field(j["b"], "b");
  file.c = parse_hex_quad(j["c"], "c");
  file.generator_x = parse_hex_quad(j["G"], "G");

  const json& k = j["K"];
  if (!k.is_array() || k.size() != 4) {
    throw Error(Errc::malformed, "K must be an array of 4 integers");
  }
  for (int i = 0; i < 4; ++i) {
    file.orders[i] = parse_decimal(k[i], "K[" + std::to_string(i) + "]");
  }

  const json& chain = j["chain"];
  require_keys(chain, {"start_x", "start_y", "counts"}, "chain");
  file.chain.start_x = parse_hex_field(chain["start_x"], "chain.start_x");
  file.chain.start_y = parse_hex_field(chain["start_y"], "chain.start_y");
  const json& counts = chain["counts"];
  if (!counts.is_array() || counts.size() != 3) {
    throw Error(Errc::malformed, "chain.counts must be an array of 3 integers");
  }
  for (int i = 0; i < 3; ++i) {
    file.chain.counts[i] =
        parse_decimal(counts[i], "chain.counts[" + std::to_string(i) + "]");
  }
  return file;
}

ParamsFile make_params_file(const SurfaceParams& sp, const ChainSpec& spec,
                            const GeneratorSet& gens) {
  ParamsFile file;
  file.p = sp.p.value();
  for (int i = 0; i < 4; ++i) {
    file.a[i] = sp.a[i].value();
    file.c[i] = sp.c[i].value();
  }
  file.b = sp.b.value();
  file.generator_x = gens.generator_matrix.values();
  file.orders = gens.orders;
  file.chain.start_x = spec.start.x().value();
  file.chain.start_y = spec.start.y().value();
  file.chain.counts = spec.counts;
  return file;
}

ParamsFile make_params_file(const SessionParams& session) {
  return make_params_file(session.surface, session.chain, session.generators);
}

SessionParams load_session(const ParamsFile& file) {
  Prime p(file.p);  // InvalidPrime if composite
  auto canonical = [&](std::uint64_t v, const char* what) {
    if (v >= file.p) {
      throw Error(Errc::malformed,
                  std::string(what) + " is not a canonical residue mod p");
    }
    return FieldElement(v, p);
  };
  std::array<FieldElement, 4> a = {canonical(file.a[0], "a[0]"),
                                   canonical(file.a[1], "a[1]"),
                                   canonical(file.a[2], "a[2]"),
                                   canonical(file.a[3], "a[3]")};
  std::array<FieldElement, 4> c = {canonical(file.c[0], "c[0]"),
                                   canonical(file.c[1], "c[1]"),
                                   canonical(file.c[2], "c[2]"),
                                   canonical(file.c[3], "c[3]")};
  SurfaceParams sp(p, a, canonical(file.b, "b"), c);

  auto curves = derive_projected_curves(sp);
  CurvePoint start = CurvePoint::affine(
      curves[0], canonical(file.chain.start_x, "chain.start_x"),
      canonical(file.chain.start_y, "chain.start_y"));
  ChainSpec spec{start, file.chain.counts};

  SessionParams session = make_session(sp, spec);
  if (session.generators.generator_matrix.values() != file.generator_x) {
    throw Error(Errc::malformed,
                "generator matrix does not match the chain it claims");
  }
  if (session.generators.orders != file.orders) {
    throw Error(Errc::malformed,
                "order vector does not match the chain it claims");
  }
  return session;
}

std::array<std::uint8_t, 32> params_digest(const ParamsFile& file) {
  // Canonical digest input; JSON formatting never reaches the hash.
  std::ostringstream oss;
  oss << "hdecc-params-v" << file.version << "\n";
  oss << "p=" << to_hex16(file.p) << "\n";
  auto quad = [&](const char* name, const std::array<std::uint64_t, 4>& q,
                  bool hex) {
    oss << name << "=";
    for (int i = 0; i < 4; ++i) {
      if (i) oss << ",";
      if (hex) {
        oss << to_hex16(q[i]);
      } else {
        oss << q[i];
      }
    }
    oss << "\n";
  };
  quad("a", file.a, true);
  oss << "b=" << to_hex16(file.b) << "\n";
  quad("c", file.c, true);
  quad("G", file.generator_x, true);
  quad("K", file.orders, false);
  oss << "chain=" << to_hex16(file.chain.start_x) << ","
      << to_hex16(file.chain.start_y) << "," << file.chain.counts[0] << ","
      << file.chain.counts[1] << "," << file.chain.counts[2] << "\n";
  return Sha256::digest(oss.str());
}

ParamsFile read_params_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::io_error, "cannot open params file " + path);
  }
  std::ostringstream oss;
  oss << in.rdbuf();
  return params_from_json(oss.str());
}

void write_params_file(const std::string& path, const ParamsFile& file) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(Errc::io_error, "cannot write params file " + path);
  }
  out << params_to_json(file);
}

const char* message_type_name(MessageType type) noexcept {
  switch (type) {
    case MessageType::hello: return "hello";
    case MessageType::token: return "token";
    case MessageType::bye:   return "bye";
  }
  return "?";
}

const char* side_name(Side side) noexcept {
  return side == Side::initiator ? "initiator" : "responder";
}

std::vector<std::uint8_t> encode_message(const ProtocolMessage& msg) {
  if (msg.matrix.has_value() != (msg.type == MessageType::token)) {
    throw Error(Errc::malformed,
                "matrix field is present exactly on token messages");
  }
  std::string payload;
  payload += "type=";
  payload += message_type_name(msg.type);
  payload += "\nside=";
  payload += side_name(msg.side);
  payload += "\nparams_digest=";
  payload += bytes_to_hex(msg.params_digest);
  payload += "\n";
  if (msg.matrix) {
    payload += "matrix=";
    for (int i = 0; i < 4; ++i) {
      if (i) payload += ",";
      payload += to_hex16((*msg.matrix)[i]);
    }
    payload += "\n";
  }
  std::vector<std::uint8_t> frame;
  frame.reserve(4 + payload.size());
  std::uint32_t len = static_cast<std::uint32_t>(payload.size());
  for (int i = 3; i >= 0; --i) frame.push_back(std::uint8_t(len >> (8 * i)));
  frame.insert(frame.end(), payload.begin(), payload.end());
  return frame;
}

namespace {

// "key=value" from one payload line, strict about the expected key.
std::string take_line_value(std::istringstream& lines, const char* key) {
  std::string line;
  if (!std::getline(lines, line)) {
    throw Error(Errc::malformed, std::string("missing '") + key + "' line");
  }
  std::string prefix = std::string(key) + "=";
  if (line.rfind(prefix, 0) != 0) {
    throw Error(Errc::malformed,
                "expected '" + prefix + "...', got '" + line + "'");
  }
  return line.substr(prefix.size());
}

}  // namespace

ProtocolMessage decode_message(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4) {
    throw Error(Errc::truncated, "frame shorter than its length prefix");
  }
  std::uint32_t len = 0;
  for (int i = 0; i < 4; ++i) len = (len << 8) | bytes[i];
  if (len == 0) {
    throw Error(Errc::malformed, "empty payload frame");
  }
  if (len > kMaxFrameLen) {
    throw Error(Errc::malformed, "frame length exceeds the protocol maximum");
  }
  if (bytes.size() < 4 + std::size_t(len)) {
    throw Error(Errc::truncated,
                "frame declares " + std::to_string(len) + " bytes, " +
                    std::to_string(bytes.size() - 4) + " present");
  }
  if (bytes.size() > 4 + std::size_t(len)) {
    throw Error(Errc::malformed, "trailing bytes after the frame");
  }
  std::string payload(reinterpret_cast<const char*>(bytes.data() + 4), len);
  if (payload.empty() || payload.back() != '\n') {
    throw Error(Errc::malformed, "payload must end with a newline");
  }

  std::istringstream lines(payload);
  ProtocolMessage msg;

  std::string type = take_line_value(lines, "type");
  if (type == "hello") {
    msg.type = MessageType::hello;
  } else if (type == "token") {
    msg.type = MessageType::token;
  } else if (type == "bye") {
    msg.type = MessageType::bye;
  } else {
    throw Error(Errc::malformed, "unknown message type '" + type + "'");
  }

  std::string side = take_line_value(lines, "side");
  if (side == "initiator") {
    msg.side = Side::initiator;
  } else if (side == "responder") {
    msg.side = Side::responder;
  } else {
    throw Error(Errc::malformed, "unknown side '" + side + "'");
  }

  std::string digest_hex = take_line_value(lines, "params_digest");
  if (digest_hex.size() != 64) {
    throw Error(Errc::malformed, "params_digest must be 64 hex chars");
  }
  auto digest_bytes = hex_to_bytes(digest_hex);
  std::copy(digest_bytes.begin(), digest_bytes.end(),
            msg.params_digest.begin());

  if (msg.type == MessageType::token) {
    std::string matrix = take_line_value(lines, "matrix");
    if (matrix.size() != 16 * 4 + 3) {
      throw Error(Errc::malformed, "matrix must be 4 comma-separated hex16");
    }
    std::array<std::uint64_t, 4> values{};
    for (int i = 0; i < 4; ++i) {
      std::size_t off = std::size_t(i) * 17;
      if (i > 0 && matrix[off - 1] != ',') {
        throw Error(Errc::malformed, "matrix entries must be comma-separated");
      }
      values[i] = parse_hex16(std::string_view(matrix).substr(off, 16));
    }
    msg.matrix = values;
  }

  std::string leftover;
  if (std::getline(lines, leftover)) {
    throw Error(Errc::malformed, "unknown trailing field '" + leftover + "'");
  }
  return msg;
}

ProtocolMessage decode_message(std::span<const std::uint8_t> bytes,
                               const std::array<std::uint8_t, 32>& expected) {
  ProtocolMessage msg = decode_message(bytes);
  if (msg.params_digest != expected) {
    throw Error(Errc::digest_mismatch,
                "peer params digest differs from the loaded params file");
  }
  return msg;
}

}  // namespace hdecc
