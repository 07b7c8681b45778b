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

#ifndef HDECC_MATRIX_HPP
#define HDECC_MATRIX_HPP

#include <array>
#include <cstdint>

#include "hdecc/field.hpp"

namespace hdecc {

/// 2x2 matrix over Z/pZ, row-major. All four entries share one modulus.
class FieldMatrix {
 public:
  FieldMatrix(FieldElement e00, FieldElement e01, FieldElement e10,
              FieldElement e11);

  static FieldMatrix identity(Prime p);
  static FieldMatrix from_values(const std::array<std::uint64_t, 4>& values,
                                 Prime p);

  Prime modulus() const noexcept { return entries_[0].modulus(); }
  const FieldElement& at(int row, int col) const {
    return entries_[row * 2 + col];
  }
  const std::array<FieldElement, 4>& entries() const noexcept {
    return entries_;
  }
  std::array<std::uint64_t, 4> values() const noexcept;

  FieldElement determinant() const;

  /// Adjugate / determinant; throws NotInvertible on a singular matrix.
  FieldMatrix inverse() const;

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  std::array<FieldElement, 4> entries_;
};

/// 2x2 integer matrix, row-major; entry i is bound to projected curve i+1.
struct ScalarMatrix {
  std::array<std::uint64_t, 4> entries;

  friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;
};

/// Entries reduced mod p, as a field matrix.
FieldMatrix reduce_mod(const ScalarMatrix& m, Prime p);

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix mat_mul(const ScalarMatrix& a, const FieldMatrix& b);
FieldMatrix mat_mul(const FieldMatrix& a, const ScalarMatrix& b);

}  // namespace hdecc

#endif  // HDECC_MATRIX_HPP
