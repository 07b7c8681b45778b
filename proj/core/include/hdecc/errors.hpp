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

#ifndef HDECC_ERRORS_HPP
#define HDECC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hdecc {

/// Every failure the library can report. The CLI maps each class to a
/// distinct nonzero exit code (see errc_exit_code).
enum class Errc {
  invalid_prime,
  modulus_mismatch,
  not_invertible,
  non_residue,
  degenerate_curve,
  curve_mismatch,
  not_on_curve,
  order_too_large,
  invalid_claimed_order,
  no_point_found,
  chain_collapse,
  invalid_order,
  key_range_violation,
  singular_generator,
  bad_characteristic,
  not_on_general_curve,
  truncated,
  malformed,
  digest_mismatch,
  protocol_violation,
  connection_failed,
  io_error,
};

const char* errc_name(Errc code) noexcept;
int errc_exit_code(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, int index = -1)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        index_(index) {}

  Errc code() const noexcept { return code_; }

  /// 1-based curve index for degenerate_curve, -1 when not applicable.
  int index() const noexcept { return index_; }

 private:
  Errc code_;
  int index_;
};

}  // namespace hdecc

#endif  // HDECC_ERRORS_HPP
