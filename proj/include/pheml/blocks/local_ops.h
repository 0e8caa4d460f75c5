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
#ifndef PHEML_BLOCKS_LOCAL_OPS_H_
#define PHEML_BLOCKS_LOCAL_OPS_H_

#include <vector>

#include "pheml/common/bigint.h"
#include "pheml/encoding/fixed_point.h"
#include "pheml/phe/cloud_rsa.h"
#include "pheml/phe/paillier.h"

namespace pheml::blocks {

using encoding::ScaledPaillier;
using encoding::ScaledRsa;

// Blocks that need no help from the key holder.

ScaledPaillier SecureAdd(const phe::PaillierPublicKey& pk,
                         const ScaledPaillier& a, const ScaledPaillier& b);
ScaledPaillier SecureSub(const phe::PaillierPublicKey& pk,
                         const ScaledPaillier& a, const ScaledPaillier& b);
// Plaintext constant m at the given scale, encrypted under pk.
ScaledPaillier EncryptConstant(const phe::PaillierPublicKey& pk,
                               const BigInt& m, int scale, Rng& rng);
// sum_i xs[i] * w[i]; the result scale is xs.scale + w_scale.
ScaledPaillier SecureDot(const phe::PaillierPublicKey& pk,
                         const std::vector<ScaledPaillier>& xs,
                         const std::vector<BigInt>& w, int w_scale);
// Plaintext-ciphertext product at scale c.scale + k_scale.
ScaledPaillier SecureScalarMul(const phe::PaillierPublicKey& pk,
                               const ScaledPaillier& c, const BigInt& k,
                               int k_scale);
ScaledRsa SecureCtMul(const phe::CloudRsaPublicKey& pk, const ScaledRsa& a,
                      const ScaledRsa& b);

// Per-record encryptions of fx(e^{+x_j}, 2) and fx(e^{-x_j}, 2) under the
// record owner's Cloud-RSA key.
struct ExpEncodedVector {
  std::vector<ScaledRsa> pos;
  std::vector<ScaledRsa> neg;
};

// Upper bounds on the scale-2 bases for features in [0, 1].
inline constexpr int kNegBaseCap = 100;
inline constexpr int kPosBaseCap = 272;

struct PowResult {
  ScaledRsa int_ct;
  ScaledRsa frac_ct;
};

// e^{-theta^T x} as the product of per-feature powers; theta is given as
// scale-2 mantissas. A positive coefficient uses the e^{-x} base and a
// negative one the e^{+x} base, so all exponents are non-negative. Throws
// kBudgetExceeded if either component could outgrow the modulus once the
// scale-4 blinding factor is applied.
PowResult SecurePow(const phe::CloudRsaPublicKey& pk,
                    const ExpEncodedVector& ev,
                    const std::vector<BigInt>& theta);

// Worst-case decimal digits of the larger power component for d features,
// including the blinding factor. Used to size Cloud-RSA moduli.
double PowDigitsBound(int d, double theta_l1_bound);

}  // namespace pheml::blocks

#endif  // PHEML_BLOCKS_LOCAL_OPS_H_
