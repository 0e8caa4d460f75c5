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
#ifndef PHEML_NET_ENVELOPE_H_
#define PHEML_NET_ENVELOPE_H_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "pheml/common/bigint.h"
#include "pheml/common/taint.h"
#include "pheml/phe/cloud_rsa.h"
#include "pheml/phe/paillier.h"

namespace pheml::net {

using Json = nlohmann::json;

struct PartyId {
  enum class Role { kDemander, kOwner };

  Role role = Role::kDemander;
  int index = 0;  // 0 for the demander, 1..n for owners

  static PartyId Demander() { return {Role::kDemander, 0}; }
  static PartyId Owner(int i) { return {Role::kOwner, i}; }

  bool is_owner() const { return role == Role::kOwner; }

  // "demander" or "owner-<i>".
  std::string ToString() const;
  static PartyId Parse(const std::string& text);

  friend auto operator<=>(const PartyId&, const PartyId&) = default;
};

// The body of a message, without routing fields.
struct Message {
  std::string kind;
  int scale = 0;
  Taint taint = Taint::Public();
  Json payload;
};

struct Envelope {
  std::string session;
  std::uint64_t seq = 0;
  PartyId from;
  PartyId to;
  std::string rt;  // round-trip id shared by a request and its reply
  Message msg;

  // Canonical wire form: compact JSON with sorted keys.
  std::string Encode() const;
  static Envelope Decode(const std::string& wire);
};

// Payload helpers. Integers travel as canonical hex strings; ciphertexts as
// {"key_id", "value"} objects so that every ciphertext names its key.
Json IntToJson(const BigInt& v);
BigInt IntFromJson(const Json& j);
Json IntsToJson(const std::vector<BigInt>& v);
std::vector<BigInt> IntsFromJson(const Json& j);

Json CtToJson(const phe::PaillierCiphertext& c);
Json CtToJson(const phe::CloudRsaCiphertext& c);
phe::PaillierCiphertext PaillierCtFromJson(const Json& j);
phe::CloudRsaCiphertext RsaCtFromJson(const Json& j);
Json CtsToJson(const std::vector<phe::PaillierCiphertext>& v);
std::vector<phe::PaillierCiphertext> PaillierCtsFromJson(const Json& j);

}  // namespace pheml::net

#endif  // PHEML_NET_ENVELOPE_H_
