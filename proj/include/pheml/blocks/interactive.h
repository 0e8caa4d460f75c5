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
#ifndef PHEML_BLOCKS_INTERACTIVE_H_
#define PHEML_BLOCKS_INTERACTIVE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "pheml/blocks/local_ops.h"
#include "pheml/blocks/parties.h"

namespace pheml::blocks {

// Demander halves of the interactive blocks. Each call is one interaction
// with the named owner, except SecureSum (n + 1).

// Exponent r of an e^r blinding factor: uniform in [-8, 8] without 0.
int DrawBlindExponent(Rng& rng);

// Pulls the record's exponential vectors from its owner.
ExpEncodedVector FetchExpVector(DemanderContext& ctx, int owner,
                                std::size_t record);

// Multiplies fx(e^r, 4) into both power components, sends them, and gets
// back the owner's Paillier encryption of fx(v, out_scale), where v is the
// recovered power still carrying the factor (e^r)^(1.01).
ScaledPaillier ConvertRsaToPaillierBlinded(DemanderContext& ctx, int owner,
                                           const PowResult& pr,
                                           const BigInt& blind, int out_scale);

// Removes the blinding locally: the unblinding factor (10^4/B)^(1.01) is
// split into an integer and a frac_digits-digit fraction, and the result
// [w]^int rescaled plus [w]^frac has scale w.scale + frac_digits.
ScaledPaillier UnblindPower(const phe::PaillierPublicKey& pk,
                            const ScaledPaillier& w, const BigInt& blind,
                            int frac_digits);

// The full conversion at the default precision: scale-2 owner reply, two
// fractional digits of unblinding, result at scale 4.
ScaledPaillier ConvertRsaToPaillier(DemanderContext& ctx, int owner,
                                    const PowResult& pr, int blind_r);

// Sends den * B (B = fx(e^r, 4)) to the owner, which returns
// trunc(x_j / (den * B)) at out_scale for each feature of the record; the
// demander multiplies B back in. Results have scale out_scale + 4.
std::vector<ScaledPaillier> SigmoidRound(DemanderContext& ctx, int owner,
                                         std::size_t record,
                                         const ScaledPaillier& den,
                                         const BigInt& blind, int out_scale);

// Re-encrypts ciphertexts under the owner's key to the target key, masking
// each with a fresh additive nonce.
std::vector<ScaledPaillier> ConvertPaillierKey(
    DemanderContext& ctx, int owner, const phe::PaillierPublicKey& target,
    const std::vector<ScaledPaillier>& cts);

// True iff the signed plaintext of c (under the owner's key) is > 0.
bool SecureSign(DemanderContext& ctx, int owner, const ScaledPaillier& c);

// Element-wise sum over all owners of the vectors they registered under
// family; the demander learns only the sums.
std::vector<BigInt> SecureSum(DemanderContext& ctx, const std::string& family);

}  // namespace pheml::blocks

#endif  // PHEML_BLOCKS_INTERACTIVE_H_
