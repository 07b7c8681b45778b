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

#include "hdecc/chain.hpp"

#include <string>

namespace hdecc {

CurvePoint lift_to_curve(const CurveParams& params, FieldElement t) {
  if (t.modulus() != params.p) {
    throw Error(Errc::modulus_mismatch, "scan seed has the wrong modulus");
  }
  FieldElement x = t;
  FieldElement one(1, params.p);
  for (std::uint64_t steps = 0; steps < params.p.value(); ++steps) {
    FieldElement rhs = x * x * x + params.a * x + params.b;
    if (rhs.legendre() != -1) {
      return CurvePoint::affine(params, x, rhs.sqrt());
    }
    x = x + one;
  }
  throw Error(Errc::no_point_found,
              "no quadratic residue met in a full scan cycle mod " +
                  std::to_string(params.p.value()));
}

GeneratorSet build_generator_chain(const SurfaceParams& sp,
                                   const ChainSpec& spec) {
  auto curves = derive_projected_curves(sp);

  if (spec.start.is_infinity()) {
    throw Error(Errc::not_on_curve, "chain start must be an affine point");
  }
  if (!(spec.start.params() == curves[0])) {
    throw Error(Errc::curve_mismatch,
                "chain start does not lie on projected curve 1");
  }
  for (auto count : spec.counts) {
    if (count == 0) {
      throw Error(Errc::malformed, "hop iteration counts must be >= 1");
    }
  }

  CurvePoint g1 = spec.start;
  std::array<CurvePoint, 4> points = {g1, g1, g1, g1};
  for (int k = 0; k < 3; ++k) {
    CurvePoint hop = scalar_mul(spec.counts[k], points[k]);
    if (hop.is_infinity()) {
      throw Error(Errc::chain_collapse,
                  "hop " + std::to_string(k + 1) +
                      " landed on O; its x-coordinate is undefined");
    }
    // Carry the x-coordinate into the next curve's field before scanning.
    FieldElement seed(hop.x().value(), curves[k + 1].p);
    points[k + 1] = lift_to_curve(curves[k + 1], seed);
  }

  std::array<std::uint64_t, 4> orders = {
      subgroup_order(points[0]), subgroup_order(points[1]),
      subgroup_order(points[2]), subgroup_order(points[3])};

  FieldMatrix g = FieldMatrix(points[0].x(), points[1].x(), points[2].x(),
                              points[3].x());
  return GeneratorSet{points, g, orders};
}

}  // namespace hdecc
