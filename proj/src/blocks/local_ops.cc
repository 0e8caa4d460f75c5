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
#include "pheml/blocks/local_ops.h"

#include <algorithm>
#include <cmath>

#include "pheml/common/error.h"

namespace pheml::blocks {
namespace {

void CheckSameScale(const ScaledPaillier& a, const ScaledPaillier& b) {
  if (a.scale != b.scale) {
    throw Error(ErrorCode::kScaleMismatch,
                "scales differ: " + std::to_string(a.scale) + " vs " +
                    std::to_string(b.scale));
  }
}

}  // namespace

ScaledPaillier SecureAdd(const phe::PaillierPublicKey& pk,
                         const ScaledPaillier& a, const ScaledPaillier& b) {
  CheckSameScale(a, b);
  return {phe::PaillierAdd(pk, a.ct, b.ct), a.scale, Taint::Cipher()};
}

ScaledPaillier SecureSub(const phe::PaillierPublicKey& pk,
                         const ScaledPaillier& a, const ScaledPaillier& b) {
  CheckSameScale(a, b);
  return {phe::PaillierSub(pk, a.ct, b.ct), a.scale, Taint::Cipher()};
}

ScaledPaillier EncryptConstant(const phe::PaillierPublicKey& pk,
                               const BigInt& m, int scale, Rng& rng) {
  return {phe::PaillierEncrypt(pk, encoding::ToResidue(m, pk.n), rng), scale,
          Taint::Cipher()};
}

ScaledPaillier SecureDot(const phe::PaillierPublicKey& pk,
                         const std::vector<ScaledPaillier>& xs,
                         const std::vector<BigInt>& w, int w_scale) {
  if (xs.empty() || xs.size() != w.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "dot product needs equal, non-empty vectors");
  }
  ScaledPaillier acc = SecureScalarMul(pk, xs[0], w[0], w_scale);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    acc = SecureAdd(pk, acc, SecureScalarMul(pk, xs[i], w[i], w_scale));
  }
  return acc;
}

ScaledPaillier SecureScalarMul(const phe::PaillierPublicKey& pk,
                               const ScaledPaillier& c, const BigInt& k,
                               int k_scale) {
  const int scale = c.scale + k_scale;
  if (scale >= encoding::KeyDigits(pk.n)) {
    throw Error(ErrorCode::kBudgetExceeded, "product scale exceeds the key");
  }
  return {phe::PaillierScalarPow(pk, c.ct, k), scale, Taint::Cipher()};
}

ScaledRsa SecureCtMul(const phe::CloudRsaPublicKey& pk, const ScaledRsa& a,
                      const ScaledRsa& b) {
  return {phe::CloudRsaMul(pk, a.ct, b.ct), a.scale + b.scale,
          Taint::Cipher()};
}

PowResult SecurePow(const phe::CloudRsaPublicKey& pk,
                    const ExpEncodedVector& ev,
                    const std::vector<BigInt>& theta) {
  if (ev.pos.size() != theta.size() || ev.neg.size() != theta.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "exponential vectors do not match the model dimension");
  }
  const phe::CloudRsaCiphertext one{BigInt(1), pk.key_id};
  PowResult out{{one, 0, Taint::Cipher()}, {one, 0, Taint::Cipher()}};
  double int_digits = encoding::kBlindScale;
  double frac_digits = encoding::kBlindScale;
  for (std::size_t j = 0; j < theta.size(); ++j) {
    const encoding::CoeffDecomposition c = encoding::DecomposeMantissa(theta[j]);
    const ScaledRsa& base = c.sign > 0 ? ev.neg[j] : ev.pos[j];
    const double cap_digits =
        std::log10(c.sign > 0 ? kNegBaseCap : kPosBaseCap);
    int_digits += c.int_part.get_d() * cap_digits;
    frac_digits += c.frac_part * cap_digits;
    if (c.int_part > 0) {
      out.int_ct.ct = phe::CloudRsaMul(
          pk, out.int_ct.ct, phe::CloudRsaPow(pk, base.ct, c.int_part));
      out.int_ct.scale += base.scale * static_cast<int>(c.int_part.get_si());
    }
    if (c.frac_part > 0) {
      out.frac_ct.ct = phe::CloudRsaMul(
          pk, out.frac_ct.ct, phe::CloudRsaPow(pk, base.ct, c.frac_part));
      out.frac_ct.scale += base.scale * static_cast<int>(c.frac_part);
    }
  }
  const int key_digits = encoding::KeyDigits(pk.n);
  const double required = std::max(int_digits, frac_digits);
  encoding::RequireBudget(encoding::DigitBudget{key_digits, required},
                          "secure power");
  return out;
}

double PowDigitsBound(int d, double theta_l1_bound) {
  const double cap = std::log10(kPosBaseCap);
  const double frac = std::min(99.0 * d, 100.0 * theta_l1_bound);
  return std::max(theta_l1_bound, frac) * cap + encoding::kBlindScale;
}

}  // namespace pheml::blocks
