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
#ifndef PHEML_NET_AUDIT_H_
#define PHEML_NET_AUDIT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "pheml/net/session.h"

namespace pheml::net {

// Message kinds used on the wire.
namespace kind {
inline constexpr char kKeyAnnounce[] = "key-announce";
inline constexpr char kUploadSvm[] = "upload-svm";
inline constexpr char kUploadLr[] = "upload-lr";
inline constexpr char kExpRequest[] = "exp-request";
inline constexpr char kExpVector[] = "exp-vector";
inline constexpr char kBb7Request[] = "bb7-request";
inline constexpr char kBb7Reply[] = "bb7-reply";
inline constexpr char kSigmoidRequest[] = "sigmoid-request";
inline constexpr char kSigmoidReply[] = "sigmoid-reply";
inline constexpr char kKeySwitchRequest[] = "keyswitch-request";
inline constexpr char kKeySwitchReply[] = "keyswitch-reply";
inline constexpr char kSignRequest[] = "sign-request";
inline constexpr char kSignBit[] = "sign-bit";
inline constexpr char kSumRequest[] = "sum-request";
inline constexpr char kSumShare[] = "sum-share";
}  // namespace kind

// (a) an owner could read an unblinded model-derived value;
// (b) a party could read an unblinded record-derived value;
// (c) a nonce id was used by more than one message;
// (d) a sign-bit reply was not exactly one bit.
struct Violation {
  char code;
  std::uint64_t line;  // index into Transcript::lines
  std::string detail;
};

struct AuditReport {
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
  bool Has(char code) const;
  std::string Summary() const;
};

AuditReport AuditTranscript(const Transcript& t);

}  // namespace pheml::net

#endif  // PHEML_NET_AUDIT_H_
