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

#ifndef HDECC_SURFACE_HPP
#define HDECC_SURFACE_HPP

#include <array>
#include <iosfwd>
#include <vector>

#include "hdecc/curve.hpp"

namespace hdecc {

// The 5D hyper-surface y^2 = x1^3 + x2^3 + x3^3 + x4^3 + sum(a_i x_i) + b
// over Z/pZ, and its four axis projections. Freezing x_j = c_j for j != i
// turns the surface into the elliptic curve
//   y^2 = x_i^3 + a_i x_i + b_i,   b_i = b + sum_{j != i} (c_j^3 + a_j c_j).

/// Defines the surface and its projection constants. Construction derives
/// all four projected curves and rejects parameter sets where any of them
/// is singular (DegenerateCurve, with the failing 1-based index).
struct SurfaceParams {
  SurfaceParams(Prime p, std::array<FieldElement, 4> a, FieldElement b,
                std::array<FieldElement, 4> c);

  Prime p;
  std::array<FieldElement, 4> a;
  FieldElement b;
  std::array<FieldElement, 4> c;

  friend bool operator==(const SurfaceParams&, const SurfaceParams&) = default;
};

/// The four projected curves, in axis order. Each is validated; a singular
/// projection throws DegenerateCurve carrying the failing 1-based index.
std::array<CurveParams, 4> derive_projected_curves(const SurfaceParams& sp);

struct SurfacePoint {
  FieldElement y;
  std::array<FieldElement, 4> x;
};

bool is_on_surface(const SurfaceParams& sp, const SurfacePoint& pt);

/// Embeds a point of projected curve i (1-based) back into 5D by freezing
/// the other coordinates at their projection constants. Requires an affine
/// point on that curve.
SurfacePoint lift_to_surface(const SurfaceParams& sp, int curve_index,
                             const CurvePoint& pt);

// Real-valued sampling of the two-variable section
//   y^2 = x1^3 + x2^3 + a1*x1 + a2*x2 + b
// used for plotting. Double precision; exactness is not a goal here.

struct SamplingGrid {
  enum class Fix { none, x1, x2 };
  Fix fix = Fix::none;
  double fixed_value = 0.0;
  double lo = -2.0;
  double hi = 2.0;
  double step = 0.1;
};

struct RealSample {
  double x1;
  double x2;
  double y;
};

/// Grid samples where the right-hand side is non-negative; both y branches
/// are emitted (one row when y = 0). An empty result is allowed.
std::vector<RealSample> sample_real_curve(double a1, double a2, double b,
                                          const SamplingGrid& grid);

/// CSV with header "x1,x2,y", one row per sample, decimal text.
void write_samples_csv(std::ostream& os, const std::vector<RealSample>& rows);

}  // namespace hdecc

#endif  // HDECC_SURFACE_HPP
