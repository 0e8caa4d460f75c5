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
#include "pheml/phe/key_io.h"

#include "json.hpp"
#include "pheml/common/error.h"

namespace pheml::phe {
namespace {

using nlohmann::json;

json ParseObject(const std::string& text, const char* what) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (!doc.is_object()) {
    throw Error(ErrorCode::kIo, std::string("malformed ") + what + " document");
  }
  return doc;
}

std::string Field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end() || !it->is_string()) {
    throw Error(ErrorCode::kIo, std::string("missing field ") + name);
  }
  return it->get<std::string>();
}

void ExpectKind(const json& doc, const std::string& kind) {
  if (Field(doc, "kind") != kind) {
    throw Error(ErrorCode::kIo,
                "expected kind " + kind + ", got " + Field(doc, "kind"));
  }
}

void CheckKeyId(const json& doc, const KeyId& derived) {
  if (Field(doc, "key_id") != derived) {
    throw Error(ErrorCode::kIo, "key_id does not match modulus");
  }
}

}  // namespace

std::string SerializePaillierPublicKey(const PaillierPublicKey& pk) {
  return json{{"kind", "paillier-public"},
              {"key_id", pk.key_id},
              {"n", ToHex(pk.n)}}
      .dump();
}

std::string SerializePaillierPrivateKey(const PaillierPrivateKey& sk) {
  return json{{"kind", "paillier-private"},
              {"key_id", sk.key_id},
              {"n", ToHex(sk.n)},
              {"p", ToHex(sk.p)},
              {"q", ToHex(sk.q)}}
      .dump();
}

std::string SerializeCloudRsaKey(const CloudRsaKeyMaterial& key,
                                 bool public_only) {
  json doc{{"key_id", key.key_id}, {"n", ToHex(key.n)}};
  if (public_only) {
    doc["kind"] = "cloudrsa-public";
  } else {
    doc["kind"] = "cloudrsa-private";
    doc["e"] = ToHex(key.enc_exp);
    doc["d"] = ToHex(key.dec_exp);
    doc["p"] = ToHex(key.p);
    doc["q"] = ToHex(key.q);
  }
  return doc.dump();
}

PaillierPublicKey ParsePaillierPublicKey(const std::string& text) {
  json doc = ParseObject(text, "key");
  ExpectKind(doc, "paillier-public");
  PaillierPublicKey pk = MakePaillierPublicKey(FromHex(Field(doc, "n")));
  CheckKeyId(doc, pk.key_id);
  return pk;
}

PaillierKeyPair ParsePaillierPrivateKey(const std::string& text) {
  json doc = ParseObject(text, "key");
  ExpectKind(doc, "paillier-private");
  PaillierKeyPair kp =
      MakePaillierKeyPair(FromHex(Field(doc, "p")), FromHex(Field(doc, "q")));
  if (kp.pub.n != FromHex(Field(doc, "n"))) {
    throw Error(ErrorCode::kIo, "n does not equal p*q");
  }
  CheckKeyId(doc, kp.pub.key_id);
  return kp;
}

CloudRsaKeyMaterial ParseCloudRsaKey(const std::string& text) {
  json doc = ParseObject(text, "key");
  ExpectKind(doc, "cloudrsa-private");
  CloudRsaKeyMaterial key =
      MakeCloudRsaKey(FromHex(Field(doc, "p")), FromHex(Field(doc, "q")),
                      FromHex(Field(doc, "e")));
  if (key.n != FromHex(Field(doc, "n")) ||
      key.dec_exp != FromHex(Field(doc, "d"))) {
    throw Error(ErrorCode::kIo, "inconsistent Cloud-RSA key document");
  }
  CheckKeyId(doc, key.key_id);
  return key;
}

CloudRsaPublicKey ParseCloudRsaPublicKey(const std::string& text) {
  json doc = ParseObject(text, "key");
  const std::string kind = Field(doc, "kind");
  if (kind != "cloudrsa-public" && kind != "cloudrsa-private") {
    throw Error(ErrorCode::kIo, "not a Cloud-RSA key: " + kind);
  }
  CloudRsaPublicKey pk = MakeCloudRsaPublicKey(FromHex(Field(doc, "n")));
  CheckKeyId(doc, pk.key_id);
  return pk;
}

std::string SerializeCiphertext(const PaillierCiphertext& c) {
  return json{{"key_id", c.key_id}, {"value", ToHex(c.value)}}.dump();
}

std::string SerializeCiphertext(const CloudRsaCiphertext& c) {
  return json{{"key_id", c.key_id}, {"value", ToHex(c.value)}}.dump();
}

PaillierCiphertext ParsePaillierCiphertext(const std::string& text) {
  json doc = ParseObject(text, "ciphertext");
  return PaillierCiphertext{FromHex(Field(doc, "value")),
                            Field(doc, "key_id")};
}

CloudRsaCiphertext ParseCloudRsaCiphertext(const std::string& text) {
  json doc = ParseObject(text, "ciphertext");
  return CloudRsaCiphertext{FromHex(Field(doc, "value")),
                            Field(doc, "key_id")};
}

}  // namespace pheml::phe
