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

#ifndef HDECC_TESTS_HELPERS_HPP
#define HDECC_TESTS_HELPERS_HPP

#include <cstdint>
#include <vector>

#include <doctest.h>

#include "hdecc/curve.hpp"
#include "hdecc/errors.hpp"

namespace hdecc::test {

// Independent oracles. These deliberately avoid the library's own search
// and counting paths: enumeration is a plain double loop over (x, y), and
// order finding is literal repeated addition.

inline std::vector<CurvePoint> enumerate_points_naive(const CurveParams& params) {
  std::vector<CurvePoint> pts;
  pts.push_back(CurvePoint::infinity(params));
  std::uint64_t p = params.p.value();
  for (std::uint64_t x = 0; x < p; ++x) {
    for (std::uint64_t y = 0; y < p; ++y) {
      FieldElement fx(x, params.p), fy(y, params.p);
      if (is_on_curve(params, fx, fy)) {
        pts.push_back(CurvePoint::affine(params, fx, fy));
      }
    }
  }
  return pts;
}

inline std::uint64_t order_naive(const CurvePoint& g) {
  CurvePoint acc = g;
  std::uint64_t k = 1;
  while (!acc.is_infinity()) {
    acc = point_add(acc, g);
    ++k;
  }
  return k;
}

/// Runs fn and asserts it throws hdecc::Error with the given class.
template <typename Fn>
void expect_error(Errc code, Fn&& fn) {
  try {
    fn();
    FAIL_CHECK("expected " << errc_name(code) << ", nothing was thrown");
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace hdecc::test

#endif  // HDECC_TESTS_HELPERS_HPP
