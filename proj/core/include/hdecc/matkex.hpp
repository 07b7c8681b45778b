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

#ifndef HDECC_MATKEX_HPP
#define HDECC_MATKEX_HPP

#include <cstdint>
#include <random>

#include "hdecc/chain.hpp"
#include "hdecc/matrix.hpp"

namespace hdecc {

// Matrix-form Diffie-Hellman over the public generator matrix G:
//
//   responder private N, token T = G * N
//   initiator private M, token P = M * G
//   shared key          W = M * G * N   (both sides, by associativity)
//
// Matrix products do not commute, so the side rules matter: the responder
// always multiplies on the right, the initiator always on the left.

enum class Side { initiator, responder };

struct SessionParams {
  SurfaceParams surface;
  ChainSpec chain;           // public walk that produced the generators
  GeneratorSet generators;   // re-derivable from surface + chain
};

/// Builds a session by running the generator chain over the surface.
SessionParams make_session(const SurfaceParams& sp, const ChainSpec& spec);

/// Deterministic seeded random stream. mt19937_64 plus explicit rejection
/// sampling, so identical seeds yield identical draws on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform draw from [lo, hi], both bounds inclusive.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Private key with entry i uniform in [1, order_i - 1]. Throws
/// InvalidOrder when some subgroup order is < 3 (the range would be empty
/// or constant).
ScalarMatrix keygen_private(const SessionParams& session, SeededRng& rng);

/// Public token: responder -> G * N, initiator -> M * G. Throws
/// KeyRangeViolation when any key entry falls outside [1, order_i - 1].
FieldMatrix make_token(const SessionParams& session, const ScalarMatrix& key,
                       Side side);

/// Shared key from the peer's token: initiator -> M * T, responder -> P * N.
FieldMatrix derive_shared(const SessionParams& session, const ScalarMatrix& key,
                          const FieldMatrix& peer_token, Side side);

/// Linear-algebra recovery probe over the public view only:
/// P * G^-1 * T = M G G^-1 G N = W. Throws SingularGenerator when
/// det(G) = 0 mod p.
FieldMatrix eve_recover(const SessionParams& session, const FieldMatrix& token_t,
                        const FieldMatrix& token_p);

}  // namespace hdecc

#endif  // HDECC_MATKEX_HPP
