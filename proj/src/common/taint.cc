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
#include "pheml/common/taint.h"

#include "pheml/common/error.h"

namespace pheml {

std::string Taint::ToString() const {
  switch (kind) {
    case Kind::kPublic:
      return "public";
    case Kind::kCipher:
      return "cipher";
    case Kind::kBlinded:
      return "blinded(" + nonce_id + ")";
  }
  return "cipher";
}

Taint Taint::Parse(const std::string& text) {
  if (text == "public") return Public();
  if (text == "cipher") return Cipher();
  constexpr std::string_view kPrefix = "blinded(";
  if (text.size() > kPrefix.size() + 1 && text.starts_with(kPrefix) &&
      text.back() == ')') {
    return Blinded(text.substr(kPrefix.size(),
                               text.size() - kPrefix.size() - 1));
  }
  throw Error(ErrorCode::kDataFormat, "unknown taint '" + text + "'");
}

}  // namespace pheml
