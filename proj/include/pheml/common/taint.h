/*
 * Copyright 2026 The pheml Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef PHEML_COMMON_TAINT_H_
#define PHEML_COMMON_TAINT_H_

#include <string>

namespace pheml {

// Blinding state of a value as it crosses a party boundary. Only the
// blinding helpers in the blocks module produce kBlinded tags.
struct Taint {
  enum class Kind { kPublic, kCipher, kBlinded };

  Kind kind = Kind::kCipher;
  std::string nonce_id;

  static Taint Public() { return {Kind::kPublic, {}}; }
  static Taint Cipher() { return {Kind::kCipher, {}}; }
  static Taint Blinded(std::string nonce) {
    return {Kind::kBlinded, std::move(nonce)};
  }

  bool blinded() const { return kind == Kind::kBlinded; }

  // "public", "cipher" or "blinded(<nonce id>)".
  std::string ToString() const;
  static Taint Parse(const std::string& text);

  friend bool operator==(const Taint&, const Taint&) = default;
};

}  // namespace pheml

#endif  // PHEML_COMMON_TAINT_H_
