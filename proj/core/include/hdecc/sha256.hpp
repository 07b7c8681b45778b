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

#ifndef HDECC_SHA256_HPP
#define HDECC_SHA256_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace hdecc {

/// FIPS 180-4 SHA-256. Used as a parameter-set consistency digest.
class Sha256 {
 public:
  Sha256() { reset(); }

  void reset();
  void update(const void* data, std::size_t len);
  std::array<std::uint8_t, 32> finish();

  static std::array<std::uint8_t, 32> digest(std::string_view data);

 private:
  void process_block(const std::uint8_t* block);

  std::array<std::uint32_t, 8> state_;
  std::uint64_t total_len_;
  std::array<std::uint8_t, 64> buffer_;
  std::size_t buffer_len_;
};

}  // namespace hdecc

#endif  // HDECC_SHA256_HPP
