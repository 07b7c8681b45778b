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

#ifndef HDECC_FIELD_HPP
#define HDECC_FIELD_HPP

#include <cstdint>
#include <vector>

#include "hdecc/errors.hpp"

namespace hdecc {

// Exact arithmetic in Z/pZ for an odd prime p < 2^64. All intermediate
// products are widened to 128 bits, so the full 64-bit modulus range is
// handled without overflow. Values are immutable after construction and
// every operation is a pure function.

/// (a * b) mod m, exact for any 64-bit operands.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;

/// (base ^ exp) mod m by square-and-multiply.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

/// Deterministic primality test, exact for every n < 2^64 (Miller-Rabin
/// with the fixed witness set {2,3,5,7,11,13,17,19,23,29,31,37}).
bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime factors of n >= 2, ascending (Pollard-Brent rho).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// A validated odd prime modulus, 3 <= value < 2^64.
class Prime {
 public:
  explicit Prime(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::uint64_t value_;
};

/// The canonical residue of an integer mod p, 0 <= value < p. Arithmetic
/// between elements of different moduli throws ModulusMismatch.
class FieldElement {
 public:
  FieldElement(std::uint64_t value, Prime modulus) noexcept
      : value_(value % modulus.value()), modulus_(modulus) {}

  /// Reduces a possibly negative integer into [0, p).
  static FieldElement from_signed(std::int64_t value, Prime modulus) noexcept;

  std::uint64_t value() const noexcept { return value_; }
  Prime modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator-() const noexcept;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

  /// Multiplicative inverse; throws NotInvertible on zero.
  FieldElement inverse() const;

  /// this ^ e by square-and-multiply.
  FieldElement pow(std::uint64_t e) const noexcept;

  /// Legendre symbol: 0 for zero, +1 for a nonzero square, -1 otherwise.
  int legendre() const noexcept;

  /// Canonical square root r with r <= p - r (Tonelli-Shanks for
  /// p = 1 mod 4). Throws NonResidue when legendre() == -1.
  FieldElement sqrt() const;

 private:
  std::uint64_t value_;
  Prime modulus_;
};

}  // namespace hdecc

#endif  // HDECC_FIELD_HPP
