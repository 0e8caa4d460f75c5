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
#ifndef PHEML_PHE_KEY_IO_H_
#define PHEML_PHE_KEY_IO_H_

#include <string>

#include "pheml/phe/cloud_rsa.h"
#include "pheml/phe/paillier.h"

namespace pheml::phe {

// Canonical JSON forms (sorted keys, hex integers). Parsing recomputes the
// derived fields and rejects documents whose key_id does not match n.
std::string SerializePaillierPublicKey(const PaillierPublicKey& pk);
std::string SerializePaillierPrivateKey(const PaillierPrivateKey& sk);
std::string SerializeCloudRsaKey(const CloudRsaKeyMaterial& key,
                                 bool public_only);

PaillierPublicKey ParsePaillierPublicKey(const std::string& text);
PaillierKeyPair ParsePaillierPrivateKey(const std::string& text);
CloudRsaKeyMaterial ParseCloudRsaKey(const std::string& text);
CloudRsaPublicKey ParseCloudRsaPublicKey(const std::string& text);

std::string SerializeCiphertext(const PaillierCiphertext& c);
std::string SerializeCiphertext(const CloudRsaCiphertext& c);
PaillierCiphertext ParsePaillierCiphertext(const std::string& text);
CloudRsaCiphertext ParseCloudRsaCiphertext(const std::string& text);

}  // namespace pheml::phe

#endif  // PHEML_PHE_KEY_IO_H_
