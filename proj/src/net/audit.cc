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
#include "pheml/net/audit.h"

#include <map>

namespace pheml::net {
namespace {

enum Content : unsigned {
  kPublicContent = 0,
  kModel = 1,
  kRecord = 2,
  kFinal = 4,     // the demander's entitled output
  kSignBit = 8,
  kPlain = 16,    // payload carries cleartext integers
};

unsigned Classify(const std::string& k) {
  static const std::map<std::string, unsigned> table = {
      {kind::kKeyAnnounce, kPublicContent | kPlain},
      {kind::kUploadSvm, kRecord},
      {kind::kUploadLr, kRecord},
      {kind::kExpRequest, kPublicContent | kPlain},
      {kind::kExpVector, kRecord},
      {kind::kBb7Request, kModel},
      {kind::kBb7Reply, kModel},
      {kind::kSigmoidRequest, kModel},
      {kind::kSigmoidReply, kRecord},
      {kind::kKeySwitchRequest, kModel | kRecord},
      {kind::kKeySwitchReply, kFinal},
      // The margin 1 - y theta^T x depends on the record's label.
      {kind::kSignRequest, kRecord},
      {kind::kSignBit, kSignBit | kPlain},
      {kind::kSumRequest, kPublicContent | kPlain},
      {kind::kSumShare, kRecord | kPlain},
  };
  auto it = table.find(k);
  // Unknown kinds are treated as sensitive cleartext.
  return it == table.end() ? (kModel | kRecord | kPlain) : it->second;
}

// True when some ciphertext in the payload is under a key the recipient
// owns.
bool HasOwnCiphertext(const Json& j, const PartyId& recipient,
                      const Transcript& t) {
  if (j.is_object()) {
    auto id = j.find("key_id");
    if (id != j.end() && id->is_string() && j.contains("value")) {
      auto owner = t.key_owner.find(id->get<std::string>());
      if (owner != t.key_owner.end() && owner->second == recipient) {
        return true;
      }
    }
    for (const auto& [_, v] : j.items()) {
      if (HasOwnCiphertext(v, recipient, t)) return true;
    }
  } else if (j.is_array()) {
    for (const Json& v : j) {
      if (HasOwnCiphertext(v, recipient, t)) return true;
    }
  }
  return false;
}

}  // namespace

bool AuditReport::Has(char code) const {
  for (const Violation& v : violations) {
    if (v.code == code) return true;
  }
  return false;
}

std::string AuditReport::Summary() const {
  if (pass()) return "audit PASS";
  std::string out = "audit FAIL:";
  for (const Violation& v : violations) {
    out += std::string(" (") + v.code + ") line " + std::to_string(v.line) +
           " " + v.detail + ";";
  }
  return out;
}

AuditReport AuditTranscript(const Transcript& t) {
  AuditReport report;
  std::map<std::string, std::uint64_t> nonce_first_use;
  for (std::uint64_t i = 0; i < t.lines.size(); ++i) {
    const Envelope e = Envelope::Decode(t.lines[i]);
    const unsigned content = Classify(e.msg.kind);
    const bool readable =
        (content & kPlain) != 0 || HasOwnCiphertext(e.msg.payload, e.to, t);
    const bool blinded = e.msg.taint.blinded();
    const std::string where =
        e.msg.kind + " " + e.from.ToString() + "->" + e.to.ToString();

    if (readable && !blinded && (content & kFinal) == 0) {
      if (e.to.is_owner() && (content & kModel) != 0) {
        report.violations.push_back(
            {'a', i, "unblinded model-derived value in " + where});
      }
      if ((content & kRecord) != 0) {
        report.violations.push_back(
            {'b', i, "unblinded record-derived value in " + where});
      }
    }
    if (blinded) {
      auto [it, fresh] = nonce_first_use.emplace(e.msg.taint.nonce_id, i);
      if (!fresh) {
        report.violations.push_back(
            {'c', i,
             "nonce " + e.msg.taint.nonce_id + " already used at line " +
                 std::to_string(it->second)});
      }
    }
    if ((content & kSignBit) != 0) {
      const Json& p = e.msg.payload;
      const bool one_bit =
          p.is_string() && (p == "0" || p == "1");
      if (!one_bit) {
        report.violations.push_back({'d', i, "sign reply is not one bit"});
      }
    }
  }
  return report;
}

}  // namespace pheml::net
