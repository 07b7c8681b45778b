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

#include "hdecc/errors.hpp"

namespace hdecc {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_prime:         return "InvalidPrime";
    case Errc::modulus_mismatch:      return "ModulusMismatch";
    case Errc::not_invertible:        return "NotInvertible";
    case Errc::non_residue:           return "NonResidue";
    case Errc::degenerate_curve:      return "DegenerateCurve";
    case Errc::curve_mismatch:        return "CurveMismatch";
    case Errc::not_on_curve:          return "NotOnCurve";
    case Errc::order_too_large:       return "OrderTooLarge";
    case Errc::invalid_claimed_order: return "InvalidClaimedOrder";
    case Errc::no_point_found:        return "NoPointFound";
    case Errc::chain_collapse:        return "ChainCollapse";
    case Errc::invalid_order:         return "InvalidOrder";
    case Errc::key_range_violation:   return "KeyRangeViolation";
    case Errc::singular_generator:    return "SingularGenerator";
    case Errc::bad_characteristic:    return "BadCharacteristic";
    case Errc::not_on_general_curve:  return "NotOnGeneralCurve";
    case Errc::truncated:             return "Truncated";
    case Errc::malformed:             return "Malformed";
    case Errc::digest_mismatch:       return "DigestMismatch";
    case Errc::protocol_violation:    return "ProtocolViolation";
    case Errc::connection_failed:     return "ConnectionFailed";
    case Errc::io_error:              return "IoError";
  }
  return "UnknownError";
}

int errc_exit_code(Errc code) noexcept {
  // Stable mapping starting at 10; 0 is success, 1 is reserved for
  // unclassified failures and 2 for CLI usage errors.
  return 10 + static_cast<int>(code);
}

}  // namespace hdecc
