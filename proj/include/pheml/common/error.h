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
#ifndef PHEML_COMMON_ERROR_H_
#define PHEML_COMMON_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace pheml {

enum class ErrorCode {
  kInvalidArgument,
  kEncoding,            // plaintext outside the message space
  kWrongKey,            // ciphertext/key id mismatch
  kMalformedCiphertext,
  kBudgetExceeded,      // fixed-point digit budget violated
  kScaleMismatch,
  kGenerationFailure,   // prime search exhausted its retry bound
  kProtocolAbort,
  kSessionClosed,
  kDataFormat,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures surface as this exception type; the code lets callers
// (and the CLI's exit-code mapping) distinguish failure classes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pheml

#endif  // PHEML_COMMON_ERROR_H_
