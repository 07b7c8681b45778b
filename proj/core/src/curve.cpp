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

#include "hdecc/curve.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hdecc {

using u64 = std::uint64_t;

CurveParams::CurveParams(Prime p_, FieldElement a_, FieldElement b_)
    : p(p_), a(a_), b(b_) {
  if (a.modulus() != p || b.modulus() != p) {
    throw Error(Errc::modulus_mismatch,
                "curve coefficients must live in Z/pZ for the stated p");
  }
}

const CurveParams& validate_curve(const CurveParams& params) {
  FieldElement four(4, params.p), twenty_seven(27, params.p);
  FieldElement disc = four * params.a * params.a * params.a +
                      twenty_seven * params.b * params.b;
  if (disc.is_zero()) {
    throw Error(Errc::degenerate_curve,
                "4a^3 + 27b^2 = 0 mod " + std::to_string(params.p.value()));
  }
  return params;
}

bool is_on_curve(const CurveParams& params, const FieldElement& x,
                 const FieldElement& y) {
  if (x.modulus() != params.p || y.modulus() != params.p) return false;
  return y * y == x * x * x + params.a * x + params.b;
}

bool is_on_curve(const CurveParams& params, const CurvePoint& pt) {
  if (pt.is_infinity()) return true;
  return pt.params() == params && is_on_curve(params, pt.x(), pt.y());
}

CurvePoint CurvePoint::infinity(const CurveParams& params) {
  FieldElement zero(0, params.p);
  return CurvePoint(params, true, zero, zero);
}

CurvePoint CurvePoint::affine(const CurveParams& params, FieldElement x,
                              FieldElement y) {
  if (!is_on_curve(params, x, y)) {
    throw Error(Errc::not_on_curve,
                "(" + std::to_string(x.value()) + ", " +
                    std::to_string(y.value()) + ") does not satisfy the curve "
                    "equation mod " + std::to_string(params.p.value()));
  }
  return CurvePoint(params, false, x, y);
}

bool operator==(const CurvePoint& a, const CurvePoint& b) {
  if (!(a.params_ == b.params_)) return false;
  if (a.infinity_ || b.infinity_) return a.infinity_ == b.infinity_;
  return a.x_ == b.x_ && a.y_ == b.y_;
}

namespace {

void require_same_curve(const CurvePoint& p, const CurvePoint& q) {
  if (!(p.params() == q.params())) {
    throw Error(Errc::curve_mismatch,
                "points belong to different curves");
  }
}

}  // namespace

CurvePoint point_add(const CurvePoint& p, const CurvePoint& q) {
  require_same_curve(p, q);
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;

  const CurveParams& params = p.params();
  // Equal x: either inverse points (distinct y, or doubling with y = 0)
  // which sum to O, or a genuine doubling. Checked before any slope so the
  // slope denominators are never zero.
  if (p.x() == q.x()) {
    if (!(p.y() == q.y()) || p.y().is_zero()) {
      return CurvePoint::infinity(params);
    }
    FieldElement three(3, params.p), two(2, params.p);
    FieldElement s = (three * p.x() * p.x() + params.a) *
                     (two * p.y()).inverse();
    FieldElement rx = s * s - two * p.x();
    FieldElement ry = s * (p.x() - rx) - p.y();
    return CurvePoint::affine(params, rx, ry);
  }

  FieldElement s = (p.y() - q.y()) * (p.x() - q.x()).inverse();
  FieldElement rx = s * s - (p.x() + q.x());
  FieldElement ry = s * (p.x() - rx) - p.y();
  return CurvePoint::affine(params, rx, ry);
}

CurvePoint point_negate(const CurvePoint& p) noexcept {
  if (p.is_infinity()) return p;
  // (x, -y) satisfies the curve equation whenever (x, y) does.
  return CurvePoint::affine(p.params(), p.x(), -p.y());
}

CurvePoint scalar_mul(u64 k, const CurvePoint& p) {
  CurvePoint acc = CurvePoint::infinity(p.params());
  CurvePoint base = p;
  while (k != 0) {
    if (k & 1) acc = point_add(acc, base);
    k >>= 1;
    if (k != 0) base = point_add(base, base);
  }
  return acc;
}

u64 hasse_upper_bound(Prime p) noexcept {
  using u128 = unsigned __int128;
  u64 n = p.value();
  u64 root = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  // Settle ceil(sqrt(n)) exactly; squares are taken at 128 bits because
  // root + 1 can reach 2^32 for moduli near 2^64.
  while (u128(root) * root > n) --root;
  while (u128(root + 1) * (root + 1) <= n) ++root;
  u64 ceil_root = u128(root) * root == n ? root : root + 1;
  u128 bound = u128(n) + 1 + 2 * u128(ceil_root);
  u64 max64 = ~u64{0};
  return bound > max64 ? max64 : u64(bound);  // saturate near 2^64
}

u64 subgroup_order(const CurvePoint& g) {
  if (g.is_infinity()) {
    throw Error(Errc::malformed, "subgroup order of O is not taken");
  }
  u64 p = g.params().p.value();
  if (p > kBruteForceOrderLimit) {
    throw Error(Errc::order_too_large,
                "brute-force order search refused for p = " +
                    std::to_string(p) + " > 2^20; supply a claimed order");
  }
  u64 bound = hasse_upper_bound(g.params().p);
  CurvePoint acc = g;
  u64 k = 1;
  while (!acc.is_infinity()) {
    acc = point_add(acc, g);
    ++k;
    if (k > bound) {
      throw std::logic_error("subgroup order exceeds the Hasse bound");
    }
  }
  return k;
}

u64 subgroup_order(const CurvePoint& g, u64 claimed) {
  if (g.is_infinity()) {
    throw Error(Errc::malformed, "subgroup order of O is not taken");
  }
  if (claimed == 0) {
    throw Error(Errc::invalid_claimed_order, "claimed order must be >= 1");
  }
  if (claimed > hasse_upper_bound(g.params().p)) {
    throw Error(Errc::invalid_claimed_order,
                "claimed order " + std::to_string(claimed) +
                    " exceeds the Hasse bound");
  }
  if (!scalar_mul(claimed, g).is_infinity()) {
    throw Error(Errc::invalid_claimed_order,
                std::to_string(claimed) + " * G != O");
  }
  for (u64 q : prime_factors(claimed)) {
    if (scalar_mul(claimed / q, g).is_infinity()) {
      throw Error(Errc::invalid_claimed_order,
                  "claimed order is not minimal: (claimed/" +
                      std::to_string(q) + ") * G = O");
    }
  }
  return claimed;
}

}  // namespace hdecc
