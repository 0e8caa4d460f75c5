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
#include "pheml/common/error.h"

namespace pheml {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid argument";
    case ErrorCode::kEncoding:
      return "encoding error";
    case ErrorCode::kWrongKey:
      return "wrong key";
    case ErrorCode::kMalformedCiphertext:
      return "malformed ciphertext";
    case ErrorCode::kBudgetExceeded:
      return "digit budget exceeded";
    case ErrorCode::kScaleMismatch:
      return "scale mismatch";
    case ErrorCode::kGenerationFailure:
      return "key generation failure";
    case ErrorCode::kProtocolAbort:
      return "protocol abort";
    case ErrorCode::kSessionClosed:
      return "session closed";
    case ErrorCode::kDataFormat:
      return "data format error";
    case ErrorCode::kIo:
      return "i/o error";
  }
  return "unknown error";
}

}  // namespace pheml
