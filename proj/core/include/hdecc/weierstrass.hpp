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

#ifndef HDECC_WEIERSTRASS_HPP
#define HDECC_WEIERSTRASS_HPP

#include "hdecc/field.hpp"

namespace hdecc {

// Reduction of the general Weierstrass equation
//   y^2 + c1*x*y + c3*y = x^3 + c2*x^2 + c4*x + c6
// to the short form eta^2 = xi^3 + A*xi + B by completing the square and
// the cube. Valid away from characteristic 2 and 3; the constants
// 1/2, 1/12, 1/48, 1/864 are modular inverses (48 = 2^4*3, 864 = 2^5*3^3).

struct GeneralWeierstrass {
  /// Throws BadCharacteristic for p in {2, 3}.
  GeneralWeierstrass(Prime p, FieldElement c1, FieldElement c2,
                     FieldElement c3, FieldElement c4, FieldElement c6);

  Prime p;
  FieldElement c1, c2, c3, c4, c6;
};

struct ShortForm {
  Prime p;
  FieldElement a;   // -d4 / 48
  FieldElement b;   // -d6 / 864
  FieldElement d4;  // (c1^2 + 4c2)^2 - 24(c1c3 + 2c4)
  FieldElement d6;  // -(c1^2+4c2)^3 + 36(c1^2+4c2)(c1c3+2c4) - 216(c3^2+4c6)
};

ShortForm reduce_general(const GeneralWeierstrass& gw);

bool on_general_curve(const GeneralWeierstrass& gw, const FieldElement& x,
                      const FieldElement& y);

struct MappedPoint {
  FieldElement xi;
  FieldElement eta;
};

/// Affine substitution eta = y + (c1*x + c3)/2, xi = x + (c1^2 + 4c2)/12.
/// The image satisfies the short form of reduce_general(gw). Throws
/// NotOnGeneralCurve when (x, y) is not on the general curve.
MappedPoint map_point(const GeneralWeierstrass& gw, FieldElement x,
                      FieldElement y);

/// Inverse substitution; round-trips with map_point.
void unmap_point(const GeneralWeierstrass& gw, const MappedPoint& pt,
                 FieldElement& x_out, FieldElement& y_out);

}  // namespace hdecc

#endif  // HDECC_WEIERSTRASS_HPP
