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

#ifndef HDECC_PEER_HPP
#define HDECC_PEER_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hdecc/protocol.hpp"

namespace hdecc {

// Two-peer key exchange over a byte stream. One exchange per connection,
// fixed message order (the initiator always writes first):
//
//   initiator                         responder
//     hello  ------------------------->
//        <-------------------------  hello     (both check params_digest)
//     token P = M*G  ---------------->
//        <----------------  token T = G*N
//     [initiator: W = M*T]            [responder: W = P*N]
//     bye  --------------------------->
//        <---------------------------  bye
//
// Any unexpected type, side, or duplicate is a ProtocolViolation; a digest
// disagreement aborts before any token is sent.

/// Blocking octet stream; implementations throw Error on failures.
class ByteStream {
 public:
  virtual ~ByteStream() = default;
  virtual void write_all(std::span<const std::uint8_t> data) = 0;
  virtual void read_exact(std::span<std::uint8_t> data) = 0;
};

/// Reads one length-framed message (prefix included) from the stream.
std::vector<std::uint8_t> read_frame(ByteStream& stream);

struct ExchangeReport {
  std::string shared_key_hex;  // W, 64 lowercase hex chars
  std::string peer_token_hex;  // the token received from the peer
};

/// Drives one side of the exchange over an arbitrary stream.
ExchangeReport run_exchange(ByteStream& stream, const SessionParams& session,
                            Side side, const ScalarMatrix& key);

/// In-process honest run, no transport: both tokens and both derivations.
/// first = initiator report, second = responder report.
std::pair<ExchangeReport, ExchangeReport> run_demo(const SessionParams& session,
                                                   std::uint64_t seed_initiator,
                                                   std::uint64_t seed_responder);

/// Listening TCP socket bound to host:port (port 0 picks an ephemeral one).
class TcpListener {
 public:
  TcpListener(const std::string& host, std::uint16_t port);
  ~TcpListener();
  TcpListener(const TcpListener&) = delete;
  TcpListener& operator=(const TcpListener&) = delete;

  std::uint16_t port() const noexcept { return port_; }
  std::unique_ptr<ByteStream> accept_one(int timeout_ms);

 private:
  int fd_;
  std::uint16_t port_;
};

std::unique_ptr<ByteStream> tcp_connect(const std::string& host,
                                        std::uint16_t port, int timeout_ms);

struct PeerConfig {
  enum class Role { serve, connect };
  Role role = Role::serve;
  std::string host = "127.0.0.1";
  std::uint16_t port = 0;
  std::string params_path;
  std::uint64_t seed = 0;
  int timeout_ms = 10000;
};

/// Loads the params file, binds or connects, performs exactly one exchange
/// (serve = responder, connect = initiator) and reports the shared key.
ExchangeReport run_peer(const PeerConfig& config);

}  // namespace hdecc

#endif  // HDECC_PEER_HPP
