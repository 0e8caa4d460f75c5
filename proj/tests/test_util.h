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
#ifndef PHEML_TESTS_TEST_UTIL_H_
#define PHEML_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <string>
#include <vector>

#include "pheml/common/rng.h"
#include "pheml/data/dataset.h"

namespace pheml::testing {

inline std::string DataPath(const std::string& name) {
  return std::string(PHEML_DATA_DIR) + "/" + name;
}

// Points in [0, 1]^dim labelled by a fixed hyperplane, features on the
// scale-2 grid so quantization is lossless.
inline data::Dataset Synthetic(std::size_t m, std::size_t dim,
                               std::uint64_t seed) {
  Rng rng(seed);
  data::Dataset d;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> x;
    double s = 0;
    for (std::size_t j = 0; j < dim; ++j) {
      x.push_back(static_cast<double>(rng.UniformInt(0, 100)) / 100.0);
      s += (j % 2 == 0 ? 1.0 : -0.5) * x.back();
    }
    d.x.push_back(x);
    d.category.push_back(std::vector<int>(dim, -1));
    d.labels.push_back(s > 0.25 * static_cast<double>(dim) ? 1 : 0);
  }
  return d;
}

inline data::DatasetSchema NumericSchema(std::size_t dim) {
  std::string cols;
  for (std::size_t j = 0; j < dim; ++j) {
    cols += R"({"name": "f)" + std::to_string(j) +
            R"(", "role": "feature", "kind": "numeric"},)";
  }
  return data::DatasetSchema::FromJson(
      R"({"name": "synthetic", "header": false, "missing": "?", "columns": [)" +
      cols +
      R"({"name": "y", "role": "label", "values": ["0", "1"], "positive": "1"}]})");
}

}  // namespace pheml::testing

#endif  // PHEML_TESTS_TEST_UTIL_H_
