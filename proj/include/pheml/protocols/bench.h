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
#ifndef PHEML_PROTOCOLS_BENCH_H_
#define PHEML_PROTOCOLS_BENCH_H_

#include <cstdint>
#include <string>
#include <vector>

namespace pheml::protocols {

struct BlockBench {
  std::string block;
  double owner_ms = 0;
  double demander_ms = 0;
  double total_ms = 0;
  // Per trial; identical across trials.
  std::uint64_t interactions = 0;
  std::uint64_t bytes = 0;
};

inline constexpr int kBenchDim = 5;

// Times each building block on 5-dimensional vectors between the demander
// and one owner; times are averaged over trials.
std::vector<BlockBench> BenchBlocks(int key_bits, int trials,
                                    std::uint64_t seed);

std::string BenchCsv(const std::vector<BlockBench>& rows);

}  // namespace pheml::protocols

#endif  // PHEML_PROTOCOLS_BENCH_H_
