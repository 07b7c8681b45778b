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

#include "hdecc/matrix.hpp"

namespace hdecc {

FieldMatrix::FieldMatrix(FieldElement e00, FieldElement e01, FieldElement e10,
                         FieldElement e11)
    : entries_{e00, e01, e10, e11} {
  for (const auto& e : entries_) {
    if (e.modulus() != entries_[0].modulus()) {
      throw Error(Errc::modulus_mismatch,
                  "matrix entries must share one modulus");
    }
  }
}

FieldMatrix FieldMatrix::identity(Prime p) {
  FieldElement one(1, p), zero(0, p);
  return FieldMatrix(one, zero, zero, one);
}

FieldMatrix FieldMatrix::from_values(const std::array<std::uint64_t, 4>& values,
                                     Prime p) {
  return FieldMatrix(FieldElement(values[0], p), FieldElement(values[1], p),
                     FieldElement(values[2], p), FieldElement(values[3], p));
}

std::array<std::uint64_t, 4> FieldMatrix::values() const noexcept {
  return {entries_[0].value(), entries_[1].value(), entries_[2].value(),
          entries_[3].value()};
}

FieldElement FieldMatrix::determinant() const {
  return entries_[0] * entries_[3] - entries_[1] * entries_[2];
}

FieldMatrix FieldMatrix::inverse() const {
  FieldElement inv_det = determinant().inverse();  // NotInvertible if singular
  return FieldMatrix(entries_[3] * inv_det, -entries_[1] * inv_det,
                     -entries_[2] * inv_det, entries_[0] * inv_det);
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(Errc::modulus_mismatch,
                "matrix product operands have different moduli");
  }
  auto cell = [&](int r, int c) {
    return a.at(r, 0) * b.at(0, c) + a.at(r, 1) * b.at(1, c);
  };
  return FieldMatrix(cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1));
}

FieldMatrix reduce_mod(const ScalarMatrix& m, Prime p) {
  return FieldMatrix::from_values(m.entries, p);
}

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b) { return a * b; }

FieldMatrix mat_mul(const ScalarMatrix& a, const FieldMatrix& b) {
  return reduce_mod(a, b.modulus()) * b;
}

FieldMatrix mat_mul(const FieldMatrix& a, const ScalarMatrix& b) {
  return a * reduce_mod(b, a.modulus());
}

}  // namespace hdecc
