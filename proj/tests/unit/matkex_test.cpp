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

#include <random>
#include <set>

#include "helpers.hpp"

using namespace hdecc;
using hdecc::test::expect_error;

namespace {

SurfaceParams quad_surface(std::uint64_t pv, std::uint64_t av,
                           std::uint64_t bv) {
  Prime p(pv);
  FieldElement a(av, p), b(bv, p), zero(0, p);
  return SurfaceParams(p, {a, a, a, a}, b, {zero, zero, zero, zero});
}

// A session whose generator matrix and orders are overridden, for driving
// the worked token/shared examples with a chosen G. The surface and points
// stay honest; only the matrix entries are synthetic.
SessionParams synthetic_session(std::array<std::uint64_t, 4> g_values,
                                std::array<std::uint64_t, 4> orders) {
  SurfaceParams sp = quad_surface(17, 2, 2);
  auto curves = derive_projected_curves(sp);
  CurvePoint start = CurvePoint::affine(curves[0], FieldElement(5, sp.p),
                                        FieldElement(1, sp.p));
  SessionParams session = make_session(sp, ChainSpec{start, {1, 1, 1}});
  session.generators.generator_matrix =
      FieldMatrix::from_values(g_values, sp.p);
  session.generators.orders = orders;
  return session;
}

// An honest session on the quadrupled demo curve: G = [[5,5],[5,5]],
// K = (19,19,19,19).
SessionParams demo_session() {
  SurfaceParams sp = quad_surface(17, 2, 2);
  auto curves = derive_projected_curves(sp);
  CurvePoint start = CurvePoint::affine(curves[0], FieldElement(5, sp.p),
                                        FieldElement(1, sp.p));
  return make_session(sp, ChainSpec{start, {1, 1, 1}});
}

}  // namespace

TEST_CASE("seeded rng is reproducible and respects bounds") {
  SeededRng a(12345), b(12345);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t lo = 1, hi = 1 + (i % 97);
    std::uint64_t va = a.uniform(lo, hi);
    CHECK(va == b.uniform(lo, hi));
    CHECK(va >= lo);
    CHECK(va <= hi);
  }
}

TEST_CASE("keygen draws every entry inside [1, k_i - 1]") {
  SessionParams session = demo_session();
  SeededRng rng(7);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 10000; ++i) {
    ScalarMatrix key = keygen_private(session, rng);
    for (auto e : key.entries) {
      CHECK(e >= 1);
      CHECK(e <= 18);
      seen.insert(e);
    }
  }
  CHECK(seen.size() == 18);  // the whole range gets visited

  SeededRng r1(99), r2(99);
  CHECK(keygen_private(session, r1) == keygen_private(session, r2));
}

TEST_CASE("keygen rejects subgroups too small to key") {
  // (0,0) on y^2 = x^3 + x has order 2, and the c = 0 chain copies it to
  // all four curves, so every k_i = 2.
  SurfaceParams sp = quad_surface(17, 1, 0);
  auto curves = derive_projected_curves(sp);
  CurvePoint start = CurvePoint::affine(curves[0], FieldElement(0, sp.p),
                                        FieldElement(0, sp.p));
  SessionParams session = make_session(sp, ChainSpec{start, {1, 1, 1}});
  CHECK(session.generators.orders == std::array<std::uint64_t, 4>{2, 2, 2, 2});
  SeededRng rng(1);
  expect_error(Errc::invalid_order, [&] { keygen_private(session, rng); });
}

TEST_CASE("tokens follow the side rules on the worked values") {
  SessionParams session = synthetic_session({5, 6, 7, 8}, {19, 19, 19, 19});
  ScalarMatrix m{{1, 2, 3, 4}};
  FieldMatrix p_token = make_token(session, m, Side::initiator);
  CHECK(p_token.values() == std::array<std::uint64_t, 4>{2, 5, 9, 16});

  // The worked N has a zero entry, which keygen would never emit; apply
  // the same matrix algebra through mat_mul to pin the expected values.
  FieldMatrix g = session.generators.generator_matrix;
  FieldMatrix worked_n = FieldMatrix::from_values({2, 0, 1, 1}, session.surface.p);
  CHECK((g * worked_n).values() == std::array<std::uint64_t, 4>{16, 6, 5, 8});

  // Identity initiator key: P = G.
  ScalarMatrix identity{{1, 0, 0, 1}};
  // 0 entries violate the keygen range; make_token must reject them.
  expect_error(Errc::key_range_violation,
               [&] { make_token(session, identity, Side::initiator); });

  ScalarMatrix too_big{{1, 2, 3, 19}};  // k_4 - 1 = 18
  expect_error(Errc::key_range_violation,
               [&] { make_token(session, too_big, Side::responder); });
}

TEST_CASE("both sides derive the worked shared key") {
  SessionParams session = synthetic_session({5, 6, 7, 8}, {19, 19, 19, 19});
  Prime p = session.surface.p;
  ScalarMatrix m{{1, 2, 3, 4}};
  FieldMatrix g = session.generators.generator_matrix;

  // Tokens with the worked N = [[2,0],[1,1]] (zero entry, so build T
  // directly from the matrix algebra; the initiator side is fully honest).
  FieldMatrix t = g * FieldMatrix::from_values({2, 0, 1, 1}, p);
  FieldMatrix p_token = make_token(session, m, Side::initiator);

  FieldMatrix w_initiator = derive_shared(session, m, t, Side::initiator);
  CHECK(w_initiator.values() == std::array<std::uint64_t, 4>{9, 5, 0, 16});

  // Responder route: W = P * N with the same N.
  FieldMatrix w_responder =
      p_token * FieldMatrix::from_values({2, 0, 1, 1}, p);
  CHECK(w_responder == w_initiator);

  expect_error(Errc::modulus_mismatch, [&] {
    derive_shared(session, m, FieldMatrix::identity(Prime(19)),
                  Side::initiator);
  });
}

TEST_CASE("honest sessions agree; swapped-side misuse does not") {
  std::mt19937_64 gen(31);
  std::vector<std::uint64_t> primes = {17, 19, 23, 29, 31, 37, 41, 43};
  int agreed = 0;
  int swapped_diverged = 0;
  while (agreed < 60) {
    std::uint64_t pv = primes[gen() % primes.size()];
    Prime p(pv);
    auto fe = [&](std::uint64_t v) { return FieldElement(v % pv, p); };
    try {
      SurfaceParams sp(p, {fe(gen()), fe(gen()), fe(gen()), fe(gen())},
                       fe(gen()), {fe(gen()), fe(gen()), fe(gen()), fe(gen())});
      auto curves = derive_projected_curves(sp);
      CurvePoint start = lift_to_curve(curves[0], fe(gen()));
      SessionParams session =
          make_session(sp, ChainSpec{start, {1 + gen() % 4, 1 + gen() % 4,
                                             1 + gen() % 4}});
      SeededRng rng_a(gen()), rng_b(gen());
      ScalarMatrix m = keygen_private(session, rng_a);
      ScalarMatrix n = keygen_private(session, rng_b);

      FieldMatrix t = make_token(session, n, Side::responder);
      FieldMatrix p_token = make_token(session, m, Side::initiator);
      FieldMatrix w_a = derive_shared(session, m, t, Side::initiator);
      FieldMatrix w_b = derive_shared(session, n, p_token, Side::responder);
      CHECK(w_a == w_b);
      ++agreed;

      // Both acting as initiator: W_a = M_a M_b G vs W_b = M_b M_a G.
      FieldMatrix t_misuse = make_token(session, n, Side::initiator);
      FieldMatrix w_mis_a = derive_shared(session, m, t_misuse, Side::initiator);
      FieldMatrix w_mis_b = derive_shared(
          session, n, make_token(session, m, Side::initiator), Side::initiator);
      if (!(w_mis_a == w_mis_b)) ++swapped_diverged;
    } catch (const Error& e) {
      bool expected = e.code() == Errc::degenerate_curve ||
                      e.code() == Errc::chain_collapse ||
                      e.code() == Errc::invalid_order;
      CHECK(expected);
    }
  }
  CHECK(swapped_diverged > 0);  // misuse must be observable
}

TEST_CASE("matrix products over G do not commute (regression witness)") {
  Prime p(17);
  FieldMatrix g = FieldMatrix::from_values({5, 6, 7, 8}, p);
  FieldMatrix m = FieldMatrix::from_values({1, 2, 3, 4}, p);
  FieldMatrix n = FieldMatrix::from_values({2, 0, 1, 1}, p);
  FieldMatrix mgn = m * g * n;
  FieldMatrix ngm = n * g * m;
  CHECK(mgn.values() == std::array<std::uint64_t, 4>{9, 5, 0, 16});
  CHECK(ngm.values() == std::array<std::uint64_t, 4>{12, 0, 3, 12});
  CHECK_FALSE(mgn == ngm);
}

TEST_CASE("eve recovers W from the public view whenever det(G) != 0") {
  SessionParams session = synthetic_session({5, 6, 7, 8}, {19, 19, 19, 19});
  Prime p = session.surface.p;
  FieldMatrix g = session.generators.generator_matrix;
  FieldMatrix n = FieldMatrix::from_values({2, 0, 1, 1}, p);
  FieldMatrix m = FieldMatrix::from_values({1, 2, 3, 4}, p);

  FieldMatrix recovered = eve_recover(session, g * n, m * g);
  CHECK(recovered.values() == std::array<std::uint64_t, 4>{9, 5, 0, 16});

  // Identity keys: T = P = G recovers W = G.
  CHECK(eve_recover(session, g, g) == g);
}

TEST_CASE("a rank-1 generator matrix defeats the recovery probe") {
  // The unit-count chain over identical curves yields G = [[5,5],[5,5]].
  SessionParams session = demo_session();
  CHECK(session.generators.generator_matrix.values() ==
        std::array<std::uint64_t, 4>{5, 5, 5, 5});
  SeededRng rng(3);
  ScalarMatrix n = keygen_private(session, rng);
  ScalarMatrix m = keygen_private(session, rng);
  FieldMatrix t = make_token(session, n, Side::responder);
  FieldMatrix p_token = make_token(session, m, Side::initiator);
  expect_error(Errc::singular_generator,
               [&] { eve_recover(session, t, p_token); });
}
