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

#include "hdecc/field.hpp"

#include <algorithm>
#include <numeric>

namespace hdecc {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
  return static_cast<u64>((u128(a) * u128(b)) % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) noexcept {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

namespace {

// One Miller-Rabin round; n odd, n - 1 = d * 2^s.
bool witness_passes(u64 n, u64 d, int s, u64 a) noexcept {
  a %= n;
  if (a == 0) return true;
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

u64 gcd_u64(u64 a, u64 b) noexcept {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Pollard-Brent rho; returns a nontrivial factor of composite odd n.
u64 pollard_brent(u64 n) noexcept {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    u64 q = 1;
    int lam = 0, power = 1;
    while (d == 1) {
      if (lam == power) {
        x = y;
        power *= 2;
        lam = 0;
      }
      y = (mul_mod(y, y, n) + c) % n;
      ++lam;
      q = mul_mod(q, x > y ? x - y : y - x, n);
      if (lam % 64 == 0 || lam == power) {
        d = gcd_u64(q, n);
        q = 1;
      }
    }
    if (d != n) return d;
    // Rare cycle degeneracy; retry with the next polynomial offset.
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is exact for all n < 3.3e24, hence for all 64-bit n.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (!witness_passes(n, d, s, a)) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  factor_rec(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Prime::Prime(u64 value) : value_(value) {
  if (value < 3 || !is_prime(value)) {
    throw Error(Errc::invalid_prime,
                "modulus must be a prime >= 3, got " + std::to_string(value));
  }
}

FieldElement FieldElement::from_signed(std::int64_t value, Prime modulus) noexcept {
  u64 p = modulus.value();
  if (value >= 0) return FieldElement(static_cast<u64>(value), modulus);
  u64 mag = static_cast<u64>(-(value + 1)) + 1;  // |value| without overflow
  u64 r = mag % p;
  return FieldElement(r == 0 ? 0 : p - r, modulus);
}

FieldElement FieldElement::operator-() const noexcept {
  return FieldElement(value_ == 0 ? 0 : modulus_.value() - value_, modulus_);
}

namespace {

void require_same_modulus(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(Errc::modulus_mismatch,
                "operands live in different fields (p=" +
                    std::to_string(a.modulus().value()) + " vs p=" +
                    std::to_string(b.modulus().value()) + ")");
  }
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a, b);
  u64 p = a.modulus().value();
  u64 x = a.value(), y = b.value();
  // x, y < p < 2^64; avoid the wraparound of x + y.
  u64 r = x >= p - y ? x - (p - y) : x + y;
  return FieldElement(r, a.modulus());
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a, b);
  u64 p = a.modulus().value();
  u64 x = a.value(), y = b.value();
  return FieldElement(x >= y ? x - y : p - (y - x), a.modulus());
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a, b);
  return FieldElement(mul_mod(a.value(), b.value(), a.modulus().value()),
                      a.modulus());
}

FieldElement FieldElement::inverse() const {
  if (value_ == 0) {
    throw Error(Errc::not_invertible, "zero has no inverse mod " +
                                          std::to_string(modulus_.value()));
  }
  // Extended Euclid over signed 128-bit accumulators.
  using i128 = __int128;
  i128 old_r = value_, r = modulus_.value();
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    i128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  i128 inv = old_s % i128(modulus_.value());
  if (inv < 0) inv += modulus_.value();
  return FieldElement(static_cast<u64>(inv), modulus_);
}

FieldElement FieldElement::pow(u64 e) const noexcept {
  return FieldElement(pow_mod(value_, e, modulus_.value()), modulus_);
}

int FieldElement::legendre() const noexcept {
  if (value_ == 0) return 0;
  u64 p = modulus_.value();
  u64 e = pow_mod(value_, (p - 1) / 2, p);  // Euler's criterion
  return e == 1 ? 1 : -1;
}

FieldElement FieldElement::sqrt() const {
  u64 p = modulus_.value();
  if (value_ == 0) return *this;
  if (legendre() == -1) {
    throw Error(Errc::non_residue, std::to_string(value_) +
                                       " is not a square mod " +
                                       std::to_string(p));
  }
  u64 root;
  if (p % 4 == 3) {
    root = pow_mod(value_, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    u64 z = 2;
    while (FieldElement(z, modulus_).legendre() != -1) ++z;
    u64 m = s;
    u64 c = pow_mod(z, q, p);
    u64 t = pow_mod(value_, q, p);
    root = pow_mod(value_, (q + 1) / 2, p);
    while (t != 1) {
      u64 t2 = t;
      u64 i = 0;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, p);
        ++i;
      }
      u64 b = c;
      for (u64 j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
      root = mul_mod(root, b, p);
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      m = i;
    }
  }
  if (root > p - root) root = p - root;  // canonical branch
  return FieldElement(root, modulus_);
}

}  // namespace hdecc
