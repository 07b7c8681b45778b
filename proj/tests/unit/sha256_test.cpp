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

#include "hdecc/sha256.hpp"

#include <string>

#include <doctest.h>

#include "hdecc/encoding.hpp"

using namespace hdecc;

namespace {

std::string hex_digest(std::string_view data) {
  auto d = Sha256::digest(data);
  return bytes_to_hex(d);
}

}  // namespace

TEST_CASE("FIPS 180-4 vectors") {
  CHECK(hex_digest("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(hex_digest("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(hex_digest("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
        "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
  CHECK(hex_digest(std::string(1000000, 'a')) ==
        "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0");
}

TEST_CASE("incremental updates match one-shot hashing") {
  std::string data = "the quick brown fox jumps over the lazy dog";
  Sha256 h;
  for (char c : data) h.update(&c, 1);
  CHECK(bytes_to_hex(h.finish()) == hex_digest(data));

  // Boundary-straddling chunks around the 64-byte block size.
  std::string longer(200, 'x');
  Sha256 h2;
  h2.update(longer.data(), 63);
  h2.update(longer.data() + 63, 2);
  h2.update(longer.data() + 65, longer.size() - 65);
  CHECK(bytes_to_hex(h2.finish()) == hex_digest(longer));
}
