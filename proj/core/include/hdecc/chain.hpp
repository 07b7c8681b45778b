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

#ifndef HDECC_CHAIN_HPP
#define HDECC_CHAIN_HPP

#include <array>
#include <cstdint>

#include "hdecc/matrix.hpp"
#include "hdecc/surface.hpp"

namespace hdecc {

// Cross-curve generator walk. Starting from a base point G1 on projected
// curve 1, each hop multiplies the current generator by a public iteration
// count and carries the x-coordinate of the result onto the next curve:
//
//   H = count_k * G_k  on curve k;   G_{k+1} = lift_to_curve(curve_{k+1}, x(H))
//
// Three hops produce G2, G3, G4. The public generator matrix collects the
// four x-coordinates row-major, and the order vector the four subgroup
// orders.

struct ChainSpec {
  CurvePoint start;                       // base point on curve 1, != O
  std::array<std::uint64_t, 3> counts;    // public hop iteration counts, >= 1
};

struct GeneratorSet {
  std::array<CurvePoint, 4> points;    // G1..G4, each on its own curve
  FieldMatrix generator_matrix;        // [[x(G1), x(G2)], [x(G3), x(G4)]]
  std::array<std::uint64_t, 4> orders; // subgroup orders of G1..G4
};

/// Deterministic point decompression by forward scan: starting at x = t,
/// step x by +1 (mod p) until x^3 + ax + b is zero or a quadratic residue,
/// then pair x with the canonical square root. A full cycle without a hit
/// throws NoPointFound (not reachable on a validated curve with p >= 5, but
/// reported rather than assumed).
CurvePoint lift_to_curve(const CurveParams& params, FieldElement t);

/// Runs the walk and assembles the public generator set. Throws
/// ChainCollapse when an intermediate multiple is O (its x-coordinate is
/// undefined), and propagates OrderTooLarge from the order computation.
GeneratorSet build_generator_chain(const SurfaceParams& sp,
                                   const ChainSpec& spec);

}  // namespace hdecc

#endif  // HDECC_CHAIN_HPP
