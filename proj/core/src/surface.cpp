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

#include "hdecc/surface.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace hdecc {

namespace {

void require_in_field(const SurfaceParams& sp) {
  for (const auto& ai : sp.a) {
    if (ai.modulus() != sp.p) {
      throw Error(Errc::modulus_mismatch, "surface coefficient a_i has the wrong modulus");
    }
  }
  for (const auto& ci : sp.c) {
    if (ci.modulus() != sp.p) {
      throw Error(Errc::modulus_mismatch, "projection constant c_i has the wrong modulus");
    }
  }
  if (sp.b.modulus() != sp.p) {
    throw Error(Errc::modulus_mismatch, "surface coefficient b has the wrong modulus");
  }
}

}  // namespace

SurfaceParams::SurfaceParams(Prime p_, std::array<FieldElement, 4> a_,
                             FieldElement b_, std::array<FieldElement, 4> c_)
    : p(p_), a(a_), b(b_), c(c_) {
  require_in_field(*this);
  derive_projected_curves(*this);  // rejects degenerate parameter sets
}

std::array<CurveParams, 4> derive_projected_curves(const SurfaceParams& sp) {
  auto curve_for = [&](int i) {
    FieldElement bi = sp.b;
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      bi = bi + sp.c[j] * sp.c[j] * sp.c[j] + sp.a[j] * sp.c[j];
    }
    return CurveParams(sp.p, sp.a[i], bi);
  };
  std::array<CurveParams, 4> curves = {curve_for(0), curve_for(1),
                                       curve_for(2), curve_for(3)};
  for (int i = 0; i < 4; ++i) {
    try {
      validate_curve(curves[i]);
    } catch (const Error&) {
      throw Error(Errc::degenerate_curve,
                  "projected curve " + std::to_string(i + 1) +
                      " violates 4a^3 + 27b^2 != 0",
                  i + 1);
    }
  }
  return curves;
}

bool is_on_surface(const SurfaceParams& sp, const SurfacePoint& pt) {
  if (pt.y.modulus() != sp.p) return false;
  FieldElement rhs = sp.b;
  for (int i = 0; i < 4; ++i) {
    if (pt.x[i].modulus() != sp.p) return false;
    rhs = rhs + pt.x[i] * pt.x[i] * pt.x[i] + sp.a[i] * pt.x[i];
  }
  return pt.y * pt.y == rhs;
}

SurfacePoint lift_to_surface(const SurfaceParams& sp, int curve_index,
                             const CurvePoint& pt) {
  if (curve_index < 1 || curve_index > 4) {
    throw Error(Errc::malformed, "curve index must be in 1..4");
  }
  if (pt.is_infinity()) {
    throw Error(Errc::not_on_curve, "cannot lift the point at infinity");
  }
  std::array<FieldElement, 4> x = sp.c;
  x[curve_index - 1] = pt.x();
  return SurfacePoint{pt.y(), x};
}

std::vector<RealSample> sample_real_curve(double a1, double a2, double b,
                                          const SamplingGrid& grid) {
  if (!(grid.step > 0.0)) {
    throw Error(Errc::malformed, "sampling step must be positive");
  }
  std::vector<RealSample> rows;
  auto rhs = [&](double x1, double x2) {
    return x1 * x1 * x1 + x2 * x2 * x2 + a1 * x1 + a2 * x2 + b;
  };
  auto emit = [&](double x1, double x2) {
    double v = rhs(x1, x2);
    if (v < 0.0) return;
    double y = std::sqrt(v);
    rows.push_back({x1, x2, y});
    if (y != 0.0) rows.push_back({x1, x2, -y});
  };

  // Half-open sweep with an epsilon so hi itself is included despite
  // accumulated rounding.
  auto sweep = [&](auto&& fn) {
    for (double t = grid.lo; t <= grid.hi + grid.step * 1e-9; t += grid.step) {
      fn(t);
    }
  };

  switch (grid.fix) {
    case SamplingGrid::Fix::x1:
      sweep([&](double x2) { emit(grid.fixed_value, x2); });
      break;
    case SamplingGrid::Fix::x2:
      sweep([&](double x1) { emit(x1, grid.fixed_value); });
      break;
    case SamplingGrid::Fix::none:
      sweep([&](double x1) { sweep([&](double x2) { emit(x1, x2); }); });
      break;
  }
  return rows;
}

void write_samples_csv(std::ostream& os, const std::vector<RealSample>& rows) {
  os << "x1,x2,y\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", r.x1, r.x2, r.y);
    os << buf;
  }
}

}  // namespace hdecc
