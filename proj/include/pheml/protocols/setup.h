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
#ifndef PHEML_PROTOCOLS_SETUP_H_
#define PHEML_PROTOCOLS_SETUP_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "pheml/blocks/parties.h"
#include "pheml/data/dataset.h"
#include "pheml/net/session.h"

namespace pheml::protocols {

struct SetupOptions {
  int key_bits = 1024;
  // 0: no Cloud-RSA keys; otherwise the Cloud-RSA modulus size.
  int rsa_bits = 0;
  int latency_ms = 0;
  std::uint64_t seed = 1;
  net::FaultFlags faults;
};

// Cloud-RSA size that holds any power product for a d-dimensional model
// whose coefficients satisfy sum |theta_j| <= theta_l1_bound: the smallest
// multiple of 512 bits above the digit bound, and at least key_bits.
int RsaBitsFor(int d, double theta_l1_bound, int key_bits);

// One session with its demander and n owners, keys generated and public
// keys exchanged. Owner i holds shards[i - 1].
class Deployment {
 public:
  Deployment(std::vector<data::Dataset> shards, const SetupOptions& opts);
  Deployment(const Deployment&) = delete;
  Deployment& operator=(const Deployment&) = delete;

  net::Session& session() { return *session_; }
  blocks::DemanderContext& demander() { return demander_; }
  blocks::Owner& owner(int i) { return *owners_.at(i - 1); }
  int n_owners() const { return static_cast<int>(owners_.size()); }
  const data::Dataset& shard(int i) const { return shards_.at(i - 1); }
  std::size_t total_records() const { return total_; }
  // Owners in order, concatenated; the oracle trains on this.
  data::Dataset Pooled() const;

  // (owner index, local record index) for a global record index.
  std::pair<int, std::size_t> Locate(std::size_t global) const;

 private:
  std::vector<data::Dataset> shards_;
  std::size_t total_ = 0;
  std::unique_ptr<net::Session> session_;
  std::vector<std::unique_ptr<blocks::Owner>> owners_;
  blocks::DemanderContext demander_;
};

}  // namespace pheml::protocols

#endif  // PHEML_PROTOCOLS_SETUP_H_
