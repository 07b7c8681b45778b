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

#ifndef HDECC_CURVE_HPP
#define HDECC_CURVE_HPP

#include <cstdint>

#include "hdecc/field.hpp"

namespace hdecc {

/// One short-Weierstrass curve y^2 = x^3 + a*x + b over Z/pZ.
struct CurveParams {
  CurveParams(Prime p, FieldElement a, FieldElement b);

  Prime p;
  FieldElement a;
  FieldElement b;

  friend bool operator==(const CurveParams&, const CurveParams&) = default;
};

/// Rejects singular curves: throws DegenerateCurve unless
/// 4a^3 + 27b^2 != 0 mod p. Returns the params unchanged otherwise.
const CurveParams& validate_curve(const CurveParams& params);

bool is_on_curve(const CurveParams& params, const FieldElement& x,
                 const FieldElement& y);

/// An affine curve point or the distinguished point at infinity, tagged
/// with the curve it lives on. Affine construction enforces the curve
/// equation, so every CurvePoint in circulation is valid.
class CurvePoint {
 public:
  static CurvePoint infinity(const CurveParams& params);

  /// Throws NotOnCurve when (x, y) does not satisfy the curve equation.
  static CurvePoint affine(const CurveParams& params, FieldElement x,
                           FieldElement y);

  bool is_infinity() const noexcept { return infinity_; }
  const CurveParams& params() const noexcept { return params_; }

  /// Coordinates of an affine point; meaningless for infinity.
  FieldElement x() const noexcept { return x_; }
  FieldElement y() const noexcept { return y_; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b);

 private:
  CurvePoint(const CurveParams& params, bool inf, FieldElement x, FieldElement y)
      : params_(params), infinity_(inf), x_(x), y_(y) {}

  CurveParams params_;
  bool infinity_;
  FieldElement x_;
  FieldElement y_;
};

bool is_on_curve(const CurveParams& params, const CurvePoint& pt);

/// Chord-tangent addition. O is the identity; P + (-P) = O (same x and
/// opposite y, or doubling with y = 0). Throws CurveMismatch when the
/// operands belong to different curves.
CurvePoint point_add(const CurvePoint& p, const CurvePoint& q);

/// Reflection across the x-axis: (x, y) -> (x, p - y); O -> O.
CurvePoint point_negate(const CurvePoint& p) noexcept;

/// k-fold sum of p by double-and-add; 0 * p = O.
CurvePoint scalar_mul(std::uint64_t k, const CurvePoint& p);

inline CurvePoint operator+(const CurvePoint& a, const CurvePoint& b) {
  return point_add(a, b);
}
inline CurvePoint operator-(const CurvePoint& a) { return point_negate(a); }

/// Modulus above which brute-force order search is refused.
inline constexpr std::uint64_t kBruteForceOrderLimit = std::uint64_t{1} << 20;

/// p + 1 + 2*ceil(sqrt(p)): every subgroup order fits under this bound.
std::uint64_t hasse_upper_bound(Prime p) noexcept;

/// Least k >= 1 with k * g = O, by iterated addition. Requires g != O and
/// p <= 2^20; throws OrderTooLarge above the threshold.
std::uint64_t subgroup_order(const CurvePoint& g);

/// Verification mode for moduli beyond the brute-force threshold: confirms
/// claimed * g = O, claimed <= p + 1 + 2*ceil(sqrt(p)), and that
/// (claimed / q) * g != O for every prime divisor q of claimed. Throws
/// InvalidClaimedOrder when any check fails; returns claimed.
std::uint64_t subgroup_order(const CurvePoint& g, std::uint64_t claimed);

}  // namespace hdecc

#endif  // HDECC_CURVE_HPP
