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

#include "hdecc/peer.hpp"

#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>

#include "hdecc/encoding.hpp"

namespace hdecc {

namespace {

constexpr std::size_t kMaxFrameLen = 4096;

[[noreturn]] void throw_errno(Errc code, const std::string& what) {
  throw Error(code, what + ": " + std::strerror(errno));
}

class TcpStream final : public ByteStream {
 public:
  explicit TcpStream(int fd, int timeout_ms) : fd_(fd) {
    timeval tv{};
    tv.tv_sec = timeout_ms / 1000;
    tv.tv_usec = (timeout_ms % 1000) * 1000;
    setsockopt(fd_, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof tv);
    setsockopt(fd_, SOL_SOCKET, SO_SNDTIMEO, &tv, sizeof tv);
    int one = 1;
    setsockopt(fd_, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
  }

  ~TcpStream() override {
    if (fd_ >= 0) ::close(fd_);
  }

  TcpStream(const TcpStream&) = delete;
  TcpStream& operator=(const TcpStream&) = delete;

  void write_all(std::span<const std::uint8_t> data) override {
    while (!data.empty()) {
      ssize_t n = ::send(fd_, data.data(), data.size(), MSG_NOSIGNAL);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw_errno(Errc::io_error, "send failed");
      }
      data = data.subspan(std::size_t(n));
    }
  }

  void read_exact(std::span<std::uint8_t> data) override {
    while (!data.empty()) {
      ssize_t n = ::recv(fd_, data.data(), data.size(), 0);
      if (n < 0) {
        if (errno == EINTR) continue;
        if (errno == EAGAIN || errno == EWOULDBLOCK) {
          throw Error(Errc::io_error, "read timed out");
        }
        throw_errno(Errc::io_error, "recv failed");
      }
      if (n == 0) {
        throw Error(Errc::connection_failed,
                    "peer closed the connection mid-exchange");
      }
      data = data.subspan(std::size_t(n));
    }
  }

 private:
  int fd_;
};

void send_message(ByteStream& stream, const ProtocolMessage& msg) {
  auto frame = encode_message(msg);
  stream.write_all(frame);
}

/// Next message; its type and side must match, its digest must match.
ProtocolMessage expect_message(ByteStream& stream, MessageType type, Side side,
                               const std::array<std::uint8_t, 32>& digest) {
  auto frame = read_frame(stream);
  ProtocolMessage msg = decode_message(frame);
  if (msg.type != type || msg.side != side) {
    throw Error(Errc::protocol_violation,
                std::string("expected ") + message_type_name(type) + "/" +
                    side_name(side) + ", got " + message_type_name(msg.type) +
                    "/" + side_name(msg.side));
  }
  if (msg.params_digest != digest) {
    throw Error(Errc::digest_mismatch,
                "peer params digest differs from the loaded params file");
  }
  return msg;
}

}  // namespace

std::vector<std::uint8_t> read_frame(ByteStream& stream) {
  std::uint8_t header[4];
  stream.read_exact(header);
  std::uint32_t len = 0;
  for (int i = 0; i < 4; ++i) len = (len << 8) | header[i];
  if (len == 0 || len > kMaxFrameLen) {
    throw Error(Errc::malformed, "frame length " + std::to_string(len) +
                                     " outside the protocol bounds");
  }
  std::vector<std::uint8_t> frame(4 + len);
  std::copy(header, header + 4, frame.begin());
  stream.read_exact(std::span(frame).subspan(4));
  return frame;
}

ExchangeReport run_exchange(ByteStream& stream, const SessionParams& session,
                            Side side, const ScalarMatrix& key) {
  const auto digest = params_digest(make_params_file(session));
  const Side peer = side == Side::initiator ? Side::responder : Side::initiator;

  auto message = [&](MessageType type) {
    ProtocolMessage msg;
    msg.type = type;
    msg.side = side;
    msg.params_digest = digest;
    return msg;
  };

  FieldMatrix own_token = make_token(session, key, side);
  ProtocolMessage token_msg = message(MessageType::token);
  token_msg.matrix = own_token.values();

  ProtocolMessage peer_token_msg;
  if (side == Side::initiator) {
    send_message(stream, message(MessageType::hello));
    expect_message(stream, MessageType::hello, peer, digest);
    send_message(stream, token_msg);
    peer_token_msg = expect_message(stream, MessageType::token, peer, digest);
  } else {
    // Reply to the hello before validating its digest so both sides learn
    // about a params disagreement instead of one seeing a dropped socket.
    auto frame = read_frame(stream);
    ProtocolMessage hello = decode_message(frame);
    if (hello.type != MessageType::hello || hello.side != peer) {
      throw Error(Errc::protocol_violation,
                  "exchange must start with the initiator's hello");
    }
    send_message(stream, message(MessageType::hello));
    if (hello.params_digest != digest) {
      throw Error(Errc::digest_mismatch,
                  "peer params digest differs from the loaded params file");
    }
    peer_token_msg = expect_message(stream, MessageType::token, peer, digest);
    send_message(stream, token_msg);
  }

  for (auto v : *peer_token_msg.matrix) {
    if (v >= session.surface.p.value()) {
      throw Error(Errc::malformed, "token entry is not a canonical residue");
    }
  }
  FieldMatrix peer_token =
      FieldMatrix::from_values(*peer_token_msg.matrix, session.surface.p);
  FieldMatrix shared = derive_shared(session, key, peer_token, side);

  if (side == Side::initiator) {
    send_message(stream, message(MessageType::bye));
    expect_message(stream, MessageType::bye, peer, digest);
  } else {
    expect_message(stream, MessageType::bye, peer, digest);
    send_message(stream, message(MessageType::bye));
  }

  return ExchangeReport{matrix_to_hex(shared), matrix_to_hex(peer_token)};
}

std::pair<ExchangeReport, ExchangeReport> run_demo(const SessionParams& session,
                                                   std::uint64_t seed_initiator,
                                                   std::uint64_t seed_responder) {
  SeededRng rng_i(seed_initiator), rng_r(seed_responder);
  ScalarMatrix key_i = keygen_private(session, rng_i);
  ScalarMatrix key_r = keygen_private(session, rng_r);
  FieldMatrix token_i = make_token(session, key_i, Side::initiator);
  FieldMatrix token_r = make_token(session, key_r, Side::responder);
  FieldMatrix shared_i = derive_shared(session, key_i, token_r, Side::initiator);
  FieldMatrix shared_r = derive_shared(session, key_r, token_i, Side::responder);
  return {ExchangeReport{matrix_to_hex(shared_i), matrix_to_hex(token_r)},
          ExchangeReport{matrix_to_hex(shared_r), matrix_to_hex(token_i)}};
}

namespace {

addrinfo* resolve(const std::string& host, std::uint16_t port, bool passive) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  hints.ai_flags = passive ? AI_PASSIVE : 0;
  addrinfo* result = nullptr;
  int rc = ::getaddrinfo(host.empty() ? nullptr : host.c_str(),
                         std::to_string(port).c_str(), &hints, &result);
  if (rc != 0) {
    throw Error(Errc::connection_failed,
                "cannot resolve " + host + ": " + gai_strerror(rc));
  }
  return result;
}

}  // namespace

TcpListener::TcpListener(const std::string& host, std::uint16_t port)
    : fd_(-1), port_(0) {
  addrinfo* info = resolve(host, port, /*passive=*/true);
  for (addrinfo* ai = info; ai != nullptr; ai = ai->ai_next) {
    int fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) continue;
    int one = 1;
    setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
    if (::bind(fd, ai->ai_addr, ai->ai_addrlen) == 0 && ::listen(fd, 4) == 0) {
      fd_ = fd;
      break;
    }
    ::close(fd);
  }
  ::freeaddrinfo(info);
  if (fd_ < 0) {
    throw Error(Errc::connection_failed,
                "cannot listen on " + host + ":" + std::to_string(port));
  }
  sockaddr_storage bound{};
  socklen_t len = sizeof bound;
  if (::getsockname(fd_, reinterpret_cast<sockaddr*>(&bound), &len) == 0) {
    if (bound.ss_family == AF_INET) {
      port_ = ntohs(reinterpret_cast<sockaddr_in*>(&bound)->sin_port);
    } else if (bound.ss_family == AF_INET6) {
      port_ = ntohs(reinterpret_cast<sockaddr_in6*>(&bound)->sin6_port);
    }
  }
}

TcpListener::~TcpListener() {
  if (fd_ >= 0) ::close(fd_);
}

std::unique_ptr<ByteStream> TcpListener::accept_one(int timeout_ms) {
  timeval tv{};
  tv.tv_sec = timeout_ms / 1000;
  tv.tv_usec = (timeout_ms % 1000) * 1000;
  setsockopt(fd_, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof tv);
  int conn = ::accept(fd_, nullptr, nullptr);
  if (conn < 0) {
    throw_errno(Errc::connection_failed, "accept failed");
  }
  return std::make_unique<TcpStream>(conn, timeout_ms);
}

std::unique_ptr<ByteStream> tcp_connect(const std::string& host,
                                        std::uint16_t port, int timeout_ms) {
  addrinfo* info = resolve(host, port, /*passive=*/false);
  int fd = -1;
  for (addrinfo* ai = info; ai != nullptr; ai = ai->ai_next) {
    fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) continue;
    if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
    ::close(fd);
    fd = -1;
  }
  ::freeaddrinfo(info);
  if (fd < 0) {
    throw Error(Errc::connection_failed,
                "cannot connect to " + host + ":" + std::to_string(port));
  }
  return std::make_unique<TcpStream>(fd, timeout_ms);
}

ExchangeReport run_peer(const PeerConfig& config) {
  SessionParams session = load_session(read_params_file(config.params_path));
  SeededRng rng(config.seed);
  ScalarMatrix key = keygen_private(session, rng);
  if (config.role == PeerConfig::Role::serve) {
    TcpListener listener(config.host, config.port);
    auto stream = listener.accept_one(config.timeout_ms);
    return run_exchange(*stream, session, Side::responder, key);
  }
  auto stream = tcp_connect(config.host, config.port, config.timeout_ms);
  return run_exchange(*stream, session, Side::initiator, key);
}

}  // namespace hdecc
