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

#include "hdecc/matkex.hpp"

#include <string>

namespace hdecc {

SessionParams make_session(const SurfaceParams& sp, const ChainSpec& spec) {
  return SessionParams{sp, spec, build_generator_chain(sp, spec)};
}

std::uint64_t SeededRng::uniform(std::uint64_t lo, std::uint64_t hi) {
  std::uint64_t span = hi - lo + 1;
  if (span == 0) return next();  // full 64-bit range
  // Discard the top partial block so the remainder is unbiased.
  std::uint64_t reject = (0 - span) % span;  // 2^64 mod span
  std::uint64_t r = next();
  while (reject != 0 && r >= 0 - reject) r = next();
  return lo + r % span;
}

namespace {

void require_key_in_range(const ScalarMatrix& key,
                          const std::array<std::uint64_t, 4>& orders) {
  for (int i = 0; i < 4; ++i) {
    if (key.entries[i] < 1 || key.entries[i] > orders[i] - 1) {
      throw Error(Errc::key_range_violation,
                  "key entry " + std::to_string(i + 1) + " = " +
                      std::to_string(key.entries[i]) +
                      " outside [1, " + std::to_string(orders[i] - 1) + "]");
    }
  }
}

}  // namespace

ScalarMatrix keygen_private(const SessionParams& session, SeededRng& rng) {
  const auto& orders = session.generators.orders;
  for (int i = 0; i < 4; ++i) {
    if (orders[i] < 3) {
      throw Error(Errc::invalid_order,
                  "subgroup order " + std::to_string(orders[i]) +
                      " on curve " + std::to_string(i + 1) +
                      " leaves no usable key range");
    }
  }
  ScalarMatrix key{};
  for (int i = 0; i < 4; ++i) {
    key.entries[i] = rng.uniform(1, orders[i] - 1);
  }
  return key;
}

FieldMatrix make_token(const SessionParams& session, const ScalarMatrix& key,
                       Side side) {
  require_key_in_range(key, session.generators.orders);
  const FieldMatrix& g = session.generators.generator_matrix;
  return side == Side::responder ? mat_mul(g, key) : mat_mul(key, g);
}

FieldMatrix derive_shared(const SessionParams& session, const ScalarMatrix& key,
                          const FieldMatrix& peer_token, Side side) {
  if (peer_token.modulus() != session.surface.p) {
    throw Error(Errc::modulus_mismatch,
                "peer token modulus differs from the session modulus");
  }
  return side == Side::initiator ? mat_mul(key, peer_token)
                                 : mat_mul(peer_token, key);
}

FieldMatrix eve_recover(const SessionParams& session, const FieldMatrix& token_t,
                        const FieldMatrix& token_p) {
  const FieldMatrix& g = session.generators.generator_matrix;
  if (g.determinant().is_zero()) {
    throw Error(Errc::singular_generator,
                "det(G) = 0 mod p; the generator matrix is not invertible");
  }
  if (token_t.modulus() != g.modulus() || token_p.modulus() != g.modulus()) {
    throw Error(Errc::modulus_mismatch,
                "token modulus differs from the session modulus");
  }
  return token_p * g.inverse() * token_t;
}

}  // namespace hdecc
