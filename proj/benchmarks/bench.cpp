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

#include <benchmark/benchmark.h>

#include "hdecc/peer.hpp"
#include "hdecc/protocol.hpp"
#include "hdecc/sha256.hpp"

namespace {

using namespace hdecc;

constexpr std::uint64_t kBigPrime = 18446744073709551557ull;

void BM_FieldMul(benchmark::State& state) {
  Prime p(kBigPrime);
  FieldElement a(0x123456789abcdef0ull, p), b(0xfedcba9876543210ull, p);
  for (auto _ : state) {
    a = a * b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul);

void BM_FieldInverse(benchmark::State& state) {
  Prime p(kBigPrime);
  FieldElement a(0x123456789abcdef0ull, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.inverse());
  }
}
BENCHMARK(BM_FieldInverse);

void BM_FieldSqrt(benchmark::State& state) {
  Prime p(kBigPrime);
  FieldElement a(4, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.sqrt());
  }
}
BENCHMARK(BM_FieldSqrt);

void BM_IsPrime(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_prime(kBigPrime));
  }
}
BENCHMARK(BM_IsPrime);

CurveParams big_curve() {
  Prime p(kBigPrime);
  return CurveParams(p, FieldElement(2, p), FieldElement(2, p));
}

void BM_PointAdd(benchmark::State& state) {
  CurveParams c = big_curve();
  CurvePoint g = lift_to_curve(c, FieldElement(5, c.p));
  CurvePoint h = point_add(g, g);
  for (auto _ : state) {
    h = point_add(h, g);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_PointAdd);

void BM_ScalarMul64(benchmark::State& state) {
  CurveParams c = big_curve();
  CurvePoint g = lift_to_curve(c, FieldElement(5, c.p));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scalar_mul(0xdeadbeefcafef00dull, g));
  }
}
BENCHMARK(BM_ScalarMul64);

SessionParams demo_session() {
  Prime p(1009);
  FieldElement a(14, p), b(3, p), zero(0, p);
  SurfaceParams sp(p, {a, a, a, a}, b, {zero, FieldElement(1, p),
                                        FieldElement(2, p), FieldElement(3, p)});
  auto curves = derive_projected_curves(sp);
  CurvePoint start = lift_to_curve(curves[0], FieldElement(5, p));
  return make_session(sp, ChainSpec{start, {2, 3, 5}});
}

void BM_BuildChain(benchmark::State& state) {
  SessionParams session = demo_session();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        build_generator_chain(session.surface, session.chain));
  }
}
BENCHMARK(BM_BuildChain);

void BM_FullExchange(benchmark::State& state) {
  SessionParams session = demo_session();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto reports = run_demo(session, seed, seed + 1);
    benchmark::DoNotOptimize(reports);
    ++seed;
  }
}
BENCHMARK(BM_FullExchange);

void BM_Sha256_1KiB(benchmark::State& state) {
  std::string data(1024, 'x');
  for (auto _ : state) {
    benchmark::DoNotOptimize(Sha256::digest(data));
  }
  state.SetBytesProcessed(std::int64_t(state.iterations()) * 1024);
}
BENCHMARK(BM_Sha256_1KiB);

void BM_MessageRoundTrip(benchmark::State& state) {
  ProtocolMessage msg;
  msg.type = MessageType::token;
  msg.side = Side::responder;
  msg.params_digest.fill(0x5a);
  msg.matrix = std::array<std::uint64_t, 4>{1, 2, 3, 4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(decode_message(encode_message(msg)));
  }
}
BENCHMARK(BM_MessageRoundTrip);

}  // namespace

BENCHMARK_MAIN();
