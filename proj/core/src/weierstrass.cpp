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

#include "hdecc/weierstrass.hpp"

namespace hdecc {

GeneralWeierstrass::GeneralWeierstrass(Prime p_, FieldElement c1_,
                                       FieldElement c2_, FieldElement c3_,
                                       FieldElement c4_, FieldElement c6_)
    : p(p_), c1(c1_), c2(c2_), c3(c3_), c4(c4_), c6(c6_) {
  if (p.value() == 2 || p.value() == 3) {
    throw Error(Errc::bad_characteristic,
                "the square/cube completion needs characteristic != 2, 3");
  }
  for (const auto* c : {&c1, &c2, &c3, &c4, &c6}) {
    if (c->modulus() != p) {
      throw Error(Errc::modulus_mismatch,
                  "coefficients must live in Z/pZ for the stated p");
    }
  }
}

namespace {

FieldElement fe(std::uint64_t v, Prime p) { return FieldElement(v, p); }

}  // namespace

ShortForm reduce_general(const GeneralWeierstrass& gw) {
  Prime p = gw.p;
  FieldElement e = gw.c1 * gw.c1 + fe(4, p) * gw.c2;   // c1^2 + 4c2
  FieldElement f = gw.c1 * gw.c3 + fe(2, p) * gw.c4;   // c1c3 + 2c4
  FieldElement d4 = e * e - fe(24, p) * f;
  FieldElement d6 = -(e * e * e) + fe(36, p) * e * f -
                    fe(216, p) * (gw.c3 * gw.c3 + fe(4, p) * gw.c6);
  FieldElement a = -d4 * fe(48, p).inverse();
  FieldElement b = -d6 * fe(864, p).inverse();
  return ShortForm{p, a, b, d4, d6};
}

bool on_general_curve(const GeneralWeierstrass& gw, const FieldElement& x,
                      const FieldElement& y) {
  if (x.modulus() != gw.p || y.modulus() != gw.p) return false;
  FieldElement lhs = y * y + gw.c1 * x * y + gw.c3 * y;
  FieldElement rhs = x * x * x + gw.c2 * x * x + gw.c4 * x + gw.c6;
  return lhs == rhs;
}

MappedPoint map_point(const GeneralWeierstrass& gw, FieldElement x,
                      FieldElement y) {
  if (!on_general_curve(gw, x, y)) {
    throw Error(Errc::not_on_general_curve,
                "point does not satisfy the general Weierstrass equation");
  }
  Prime p = gw.p;
  FieldElement eta = y + (gw.c1 * x + gw.c3) * fe(2, p).inverse();
  FieldElement xi =
      x + (gw.c1 * gw.c1 + fe(4, p) * gw.c2) * fe(12, p).inverse();
  return MappedPoint{xi, eta};
}

void unmap_point(const GeneralWeierstrass& gw, const MappedPoint& pt,
                 FieldElement& x_out, FieldElement& y_out) {
  Prime p = gw.p;
  x_out = pt.xi - (gw.c1 * gw.c1 + fe(4, p) * gw.c2) * fe(12, p).inverse();
  y_out = pt.eta - (gw.c1 * x_out + gw.c3) * fe(2, p).inverse();
}

}  // namespace hdecc
