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
#ifndef PHEML_DATA_DATASET_H_
#define PHEML_DATA_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pheml::data {

enum class FeatureKind { kDiscrete, kNumeric };

struct FeatureSpec {
  std::string name;
  FeatureKind kind = FeatureKind::kNumeric;
  std::vector<std::string> vocab;  // discrete features only
  int column = 0;                  // position in the CSV row
};

struct DatasetSchema {
  std::string name;
  bool header = false;
  std::string missing = "?";
  int n_columns = 0;
  std::vector<std::string> column_names;  // every CSV column, in order
  std::vector<FeatureSpec> features;
  int label_column = -1;
  std::vector<std::string> label_values;
  std::string positive_label;

  static DatasetSchema FromJson(const std::string& text);
  static DatasetSchema Load(const std::string& path);
};

// Parsed rows: strings for discrete features, doubles for numeric ones
// (stored as text until normalization). Labels are 1 for positive.
struct RawTable {
  std::vector<std::vector<std::string>> cells;  // [row][feature]
  std::vector<int> labels;
  std::size_t rows_read = 0;
  std::size_t rows_dropped = 0;  // rows with a missing marker
};

RawTable LoadCsv(const std::string& path, const DatasetSchema& schema);
RawTable ParseCsv(const std::string& text, const DatasetSchema& schema);

// (train, test). Seeded shuffle, then the first round(test_fraction * rows)
// rows form the test part.
std::pair<RawTable, RawTable> Split(const RawTable& t, double test_fraction,
                                    std::uint64_t seed);

// Min-max ranges of numeric features, fitted on training rows. Discrete
// features use their vocabulary position / (|vocab| - 1).
struct Normalizer {
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<std::string> warnings;

  static Normalizer Fit(const RawTable& t, const DatasetSchema& schema);
};

// Features in [0, 1] (clamped) plus the category index of discrete values
// (-1 for numeric features).
struct Dataset {
  std::vector<std::vector<double>> x;
  std::vector<std::vector<int>> category;
  std::vector<int> labels;

  std::size_t size() const { return labels.size(); }
  std::size_t dim() const { return x.empty() ? 0 : x[0].size(); }
  void Append(const Dataset& other);
};

Dataset Normalize(const RawTable& t, const DatasetSchema& schema,
                  const Normalizer& norm);

// Shuffled near-equal horizontal split; sizes differ by at most one and the
// larger parts come first.
std::vector<Dataset> Partition(const Dataset& d, int n, std::uint64_t seed);

}  // namespace pheml::data

#endif  // PHEML_DATA_DATASET_H_
