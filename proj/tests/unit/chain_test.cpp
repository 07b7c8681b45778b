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

#include <random>

#include "helpers.hpp"

using namespace hdecc;
using hdecc::test::expect_error;
using hdecc::test::order_naive;

namespace {

// Four identical copies of y^2 = x^3 + 2x + 2 over F_17 (c = 0).
SurfaceParams quad_demo_surface() {
  Prime p(17);
  FieldElement two(2, p), zero(0, p);
  return SurfaceParams(p, {two, two, two, two}, two, {zero, zero, zero, zero});
}

CurvePoint start_point(const SurfaceParams& sp, std::uint64_t x,
                       std::uint64_t y) {
  auto curves = derive_projected_curves(sp);
  return CurvePoint::affine(curves[0], FieldElement(x, sp.p),
                            FieldElement(y, sp.p));
}

}  // namespace

TEST_CASE("lift_to_curve scans forward to the canonical root") {
  Prime p(17);
  CurveParams c(p, FieldElement(2, p), FieldElement(2, p));

  CurvePoint a = lift_to_curve(c, FieldElement(5, p));
  CHECK(a.x().value() == 5);
  CHECK(a.y().value() == 1);  // 137 = 1 mod 17, roots {1, 16}

  CurvePoint b = lift_to_curve(c, FieldElement(0, p));
  CHECK(b.x().value() == 0);
  CHECK(b.y().value() == 6);  // rhs = 2, roots {6, 11}

  // An existing x is accepted at step 0.
  CurvePoint again = lift_to_curve(c, a.x());
  CHECK(again.x() == a.x());
}

TEST_CASE("lift skips non-residue columns") {
  Prime p(17);
  CurveParams c(p, FieldElement(2, p), FieldElement(2, p));
  // x = 2: rhs = 8 + 4 + 2 = 14, a non-residue mod 17; the scan moves on
  // to x = 3 with rhs = 35 = 1, a square.
  CHECK(FieldElement(14, p).legendre() == -1);
  CurvePoint lifted = lift_to_curve(c, FieldElement(2, p));
  CHECK(lifted.x().value() == 3);
  CHECK(lifted.y().value() == 1);
}

TEST_CASE("unit hop counts thread one x across identical curves") {
  SurfaceParams sp = quad_demo_surface();
  ChainSpec spec{start_point(sp, 5, 1), {1, 1, 1}};
  GeneratorSet gens = build_generator_chain(sp, spec);

  CHECK(gens.generator_matrix.values() ==
        std::array<std::uint64_t, 4>{5, 5, 5, 5});
  CHECK(gens.orders == std::array<std::uint64_t, 4>{19, 19, 19, 19});
  for (const auto& g : gens.points) {
    CHECK(g.x().value() == 5);
    CHECK(g.y().value() == 1);
  }
}

TEST_CASE("a doubling hop lands on the lifted double") {
  SurfaceParams sp = quad_demo_surface();
  ChainSpec spec{start_point(sp, 5, 1), {2, 1, 1}};
  GeneratorSet gens = build_generator_chain(sp, spec);

  // 2 * (5,1) = (6,3); 6^3 + 2*6 + 2 = 230 = 9 mod 17, canonical root 3.
  CHECK(gens.points[1].x().value() == 6);
  CHECK(gens.points[1].y().value() == 3);
  CHECK(gens.generator_matrix.values() ==
        std::array<std::uint64_t, 4>{5, 6, 6, 6});
}

TEST_CASE("a hop to O collapses the chain") {
  SurfaceParams sp = quad_demo_surface();
  ChainSpec spec{start_point(sp, 5, 1), {19, 1, 1}};  // ord(G1) = 19
  expect_error(Errc::chain_collapse, [&] { build_generator_chain(sp, spec); });
}

TEST_CASE("chain rejects bad specs") {
  SurfaceParams sp = quad_demo_surface();
  auto curves = derive_projected_curves(sp);

  ChainSpec zero_count{start_point(sp, 5, 1), {1, 0, 1}};
  expect_error(Errc::malformed, [&] { build_generator_chain(sp, zero_count); });

  ChainSpec inf_start{CurvePoint::infinity(curves[0]), {1, 1, 1}};
  expect_error(Errc::not_on_curve, [&] { build_generator_chain(sp, inf_start); });

  // A start point bound to curve 2's parameters is rejected even though
  // the curves here are identical copies; tags must match curve 1.
  Prime p17(17);
  CurveParams other(p17, FieldElement(1, p17), FieldElement(0, p17));
  ChainSpec wrong_curve{
      CurvePoint::affine(other, FieldElement(0, p17), FieldElement(0, p17)),
      {1, 1, 1}};
  expect_error(Errc::curve_mismatch,
               [&] { build_generator_chain(sp, wrong_curve); });
}

TEST_CASE("the walk is deterministic and its orders are minimal") {
  std::mt19937_64 gen(23);
  std::vector<std::uint64_t> small_primes = {17, 19, 23, 29, 31, 37, 41,
                                             43, 47, 53, 59, 61, 67};
  int built = 0;
  while (built < 25) {
    std::uint64_t pv = small_primes[gen() % small_primes.size()];
    Prime p(pv);
    auto fe = [&](std::uint64_t v) { return FieldElement(v, p); };
    try {
      SurfaceParams sp(p, {fe(gen() % pv), fe(gen() % pv), fe(gen() % pv),
                           fe(gen() % pv)},
                       fe(gen() % pv),
                       {fe(gen() % pv), fe(gen() % pv), fe(gen() % pv),
                        fe(gen() % pv)});
      auto curves = derive_projected_curves(sp);
      CurvePoint start = lift_to_curve(curves[0], fe(gen() % pv));
      ChainSpec spec{start, {1 + gen() % 5, 1 + gen() % 5, 1 + gen() % 5}};

      GeneratorSet a = build_generator_chain(sp, spec);
      GeneratorSet b = build_generator_chain(sp, spec);
      CHECK(a.generator_matrix == b.generator_matrix);
      CHECK(a.orders == b.orders);

      for (int i = 0; i < 4; ++i) {
        const CurvePoint& g = a.points[i];
        CHECK(is_on_curve(curves[i], g));
        CHECK(g.x().value() == a.generator_matrix.values()[i]);
        CHECK(scalar_mul(a.orders[i], g).is_infinity());
        CHECK(a.orders[i] == order_naive(g));
        for (std::uint64_t q : prime_factors(a.orders[i])) {
          CHECK_FALSE(scalar_mul(a.orders[i] / q, g).is_infinity());
        }
      }
      ++built;
    } catch (const Error& e) {
      // Degenerate draws and collapsing hops are expected occasionally;
      // anything else is a real failure.
      bool expected = e.code() == Errc::degenerate_curve ||
                      e.code() == Errc::chain_collapse;
      CHECK(expected);
    }
  }
}

TEST_CASE("a pointless curve exhausts the scan") {
  // y^2 = x^3 + 2x + 2 over F_3 is non-degenerate yet has no affine
  // points: the right-hand side is 2 (the non-residue) for every x.
  Prime p(3);
  CurveParams c(p, FieldElement(2, p), FieldElement(2, p));
  validate_curve(c);
  for (std::uint64_t x = 0; x < 3; ++x) {
    CHECK(FieldElement(x * x * x + 2 * x + 2, p).legendre() == -1);
  }
  expect_error(Errc::no_point_found,
               [&] { lift_to_curve(c, FieldElement(0, p)); });
}

TEST_CASE("lift preserves the x of points already on the curve") {
  Prime p(1009);
  CurveParams c(p, FieldElement(14, p), FieldElement(3, p));
  validate_curve(c);
  std::mt19937_64 gen(5);
  for (int i = 0; i < 200; ++i) {
    CurvePoint pt = lift_to_curve(c, FieldElement(gen() % 1009, p));
    CurvePoint again = lift_to_curve(c, pt.x());
    CHECK(again.x() == pt.x());
  }
}
