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

#include <optional>
#include <random>

#include "helpers.hpp"

using namespace hdecc;
using hdecc::test::expect_error;

namespace {

GeneralWeierstrass gw(std::uint64_t pv, std::uint64_t c1, std::uint64_t c2,
                      std::uint64_t c3, std::uint64_t c4, std::uint64_t c6) {
  Prime p(pv);
  return GeneralWeierstrass(p, FieldElement(c1, p), FieldElement(c2, p),
                            FieldElement(c3, p), FieldElement(c4, p),
                            FieldElement(c6, p));
}

// Test-side point search: solve the quadratic in y column by column and
// verify each candidate against the curve equation directly.
std::optional<std::pair<FieldElement, FieldElement>> find_point(
    const GeneralWeierstrass& g) {
  Prime p = g.p;
  for (std::uint64_t xv = 0; xv < p.value(); ++xv) {
    FieldElement x(xv, p);
    FieldElement lin = g.c1 * x + g.c3;
    FieldElement rhs = x * x * x + g.c2 * x * x + g.c4 * x + g.c6;
    FieldElement disc = lin * lin + FieldElement(4, p) * rhs;
    if (disc.legendre() == -1) continue;
    FieldElement y = (disc.sqrt() - lin) * FieldElement(2, p).inverse();
    if (on_general_curve(g, x, y)) return std::make_pair(x, y);
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("reduction leaves already-short curves unchanged") {
  // c1 = c2 = c3 = 0, c4 = a, c6 = b: d4 = -48a, d6 = -864b.
  GeneralWeierstrass g = gw(1009, 0, 0, 0, 14, 3);
  ShortForm sf = reduce_general(g);
  CHECK(sf.a.value() == 14);
  CHECK(sf.b.value() == 3);
  CHECK(sf.d4 == FieldElement::from_signed(-48 * 14, g.p));
  CHECK(sf.d6 == FieldElement::from_signed(-864 * 3, g.p));
}

TEST_CASE("all-zero coefficients collapse to the cusp normal form") {
  ShortForm sf = reduce_general(gw(17, 0, 0, 0, 0, 0));
  CHECK(sf.d4.is_zero());
  CHECK(sf.d6.is_zero());
  CHECK(sf.a.is_zero());
  CHECK(sf.b.is_zero());
}

TEST_CASE("the worked reduction over F_13") {
  // c = (1, 0, 1, 0, 0): d4 = 1 - 24 = -23 = 3, d6 = -1 + 36 - 216 = 1 mod 13.
  GeneralWeierstrass g = gw(13, 1, 0, 1, 0, 0);
  ShortForm sf = reduce_general(g);
  CHECK(sf.d4.value() == 3);
  CHECK(sf.d6.value() == 1);

  // (0,0) satisfies y^2 + xy + y = x^3; eta = 1/2 = 7, xi = 1/12 = 12.
  Prime p = g.p;
  MappedPoint mapped = map_point(g, FieldElement(0, p), FieldElement(0, p));
  CHECK(mapped.eta.value() == 7);
  CHECK(mapped.xi.value() == 12);

  // The image satisfies the short form: 7^2 = 10 = 12^3 + A*12 + B mod 13.
  FieldElement lhs = mapped.eta * mapped.eta;
  FieldElement rhs = mapped.xi * mapped.xi * mapped.xi + sf.a * mapped.xi + sf.b;
  CHECK(lhs == rhs);
  CHECK(lhs.value() == 10);
}

TEST_CASE("points off the general curve are rejected") {
  GeneralWeierstrass g = gw(13, 1, 0, 1, 0, 0);
  Prime p = g.p;
  expect_error(Errc::not_on_general_curve,
               [&] { map_point(g, FieldElement(0, p), FieldElement(1, p)); });
}

TEST_CASE("characteristic 2 and 3 are refused") {
  Prime p3(3);
  expect_error(Errc::bad_characteristic, [&] {
    GeneralWeierstrass(p3, FieldElement(0, p3), FieldElement(0, p3),
                       FieldElement(0, p3), FieldElement(0, p3),
                       FieldElement(1, p3));
  });
}

TEST_CASE("mapped points satisfy the short form and round-trip") {
  std::mt19937_64 gen(13);
  std::vector<std::uint64_t> primes = {5, 7, 11, 13, 101, 257, 1009, 4093};
  int verified = 0;
  while (verified < 60) {
    std::uint64_t pv = primes[gen() % primes.size()];
    GeneralWeierstrass g = gw(pv, gen() % pv, gen() % pv, gen() % pv,
                              gen() % pv, gen() % pv);
    auto point = find_point(g);
    if (!point) continue;
    auto [x, y] = *point;

    ShortForm sf = reduce_general(g);
    MappedPoint mapped = map_point(g, x, y);
    FieldElement lhs = mapped.eta * mapped.eta;
    FieldElement rhs =
        mapped.xi * mapped.xi * mapped.xi + sf.a * mapped.xi + sf.b;
    CHECK(lhs == rhs);

    FieldElement back_x(0, g.p), back_y(0, g.p);
    unmap_point(g, mapped, back_x, back_y);
    CHECK(back_x == x);
    CHECK(back_y == y);
    ++verified;
  }
}
