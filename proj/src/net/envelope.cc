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
#include "pheml/net/envelope.h"

#include "pheml/common/error.h"

namespace pheml::net {

std::string PartyId::ToString() const {
  return is_owner() ? "owner-" + std::to_string(index) : "demander";
}

PartyId PartyId::Parse(const std::string& text) {
  if (text == "demander") return Demander();
  constexpr std::string_view kPrefix = "owner-";
  if (text.starts_with(kPrefix) && text.size() > kPrefix.size()) {
    const std::string digits = text.substr(kPrefix.size());
    if (digits.find_first_not_of("0123456789") == std::string::npos) {
      return Owner(std::stoi(digits));
    }
  }
  throw Error(ErrorCode::kDataFormat, "bad party id '" + text + "'");
}

std::string Envelope::Encode() const {
  Json j;
  j["session"] = session;
  j["seq"] = seq;
  j["from"] = from.ToString();
  j["to"] = to.ToString();
  j["rt"] = rt;
  j["kind"] = msg.kind;
  j["scale"] = msg.scale;
  j["taint"] = msg.taint.ToString();
  j["payload"] = msg.payload;
  return j.dump();
}

Envelope Envelope::Decode(const std::string& wire) {
  Json j = Json::parse(wire, nullptr, /*allow_exceptions=*/false);
  if (!j.is_object()) {
    throw Error(ErrorCode::kDataFormat, "malformed envelope");
  }
  try {
    Envelope e;
    e.session = j.at("session").get<std::string>();
    e.seq = j.at("seq").get<std::uint64_t>();
    e.from = PartyId::Parse(j.at("from").get<std::string>());
    e.to = PartyId::Parse(j.at("to").get<std::string>());
    e.rt = j.at("rt").get<std::string>();
    e.msg.kind = j.at("kind").get<std::string>();
    e.msg.scale = j.at("scale").get<int>();
    e.msg.taint = Taint::Parse(j.at("taint").get<std::string>());
    e.msg.payload = j.at("payload");
    return e;
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::kDataFormat,
                std::string("malformed envelope: ") + ex.what());
  }
}

Json IntToJson(const BigInt& v) { return ToHex(v); }

BigInt IntFromJson(const Json& j) {
  if (!j.is_string()) {
    throw Error(ErrorCode::kDataFormat, "expected a hex integer");
  }
  return FromHex(j.get<std::string>());
}

Json IntsToJson(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const BigInt& x : v) out.push_back(IntToJson(x));
  return out;
}

std::vector<BigInt> IntsFromJson(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kDataFormat, "expected an array");
  std::vector<BigInt> out;
  out.reserve(j.size());
  for (const Json& x : j) out.push_back(IntFromJson(x));
  return out;
}

Json CtToJson(const phe::PaillierCiphertext& c) {
  return Json{{"key_id", c.key_id}, {"value", ToHex(c.value)}};
}

Json CtToJson(const phe::CloudRsaCiphertext& c) {
  return Json{{"key_id", c.key_id}, {"value", ToHex(c.value)}};
}

namespace {

std::pair<std::string, BigInt> CtFields(const Json& j) {
  if (!j.is_object() || !j.contains("key_id") || !j.contains("value") ||
      !j["key_id"].is_string()) {
    throw Error(ErrorCode::kMalformedCiphertext, "malformed ciphertext");
  }
  return {j["key_id"].get<std::string>(), IntFromJson(j["value"])};
}

}  // namespace

phe::PaillierCiphertext PaillierCtFromJson(const Json& j) {
  auto [key_id, value] = CtFields(j);
  return phe::PaillierCiphertext{value, key_id};
}

phe::CloudRsaCiphertext RsaCtFromJson(const Json& j) {
  auto [key_id, value] = CtFields(j);
  return phe::CloudRsaCiphertext{value, key_id};
}

Json CtsToJson(const std::vector<phe::PaillierCiphertext>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(CtToJson(c));
  return out;
}

std::vector<phe::PaillierCiphertext> PaillierCtsFromJson(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kDataFormat, "expected an array");
  std::vector<phe::PaillierCiphertext> out;
  out.reserve(j.size());
  for (const Json& x : j) out.push_back(PaillierCtFromJson(x));
  return out;
}

}  // namespace pheml::net
