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
#include "pheml/data/dataset.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "pheml/common/error.h"
#include "pheml/common/rng.h"

namespace pheml::data {
namespace {

using nlohmann::json;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> SplitCommas(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(Trim(cell));
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

std::vector<std::size_t> Shuffled(std::size_t n, Rng& rng) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(
        rng.UniformInt(0, static_cast<std::int64_t>(i) - 1));
    std::swap(idx[i - 1], idx[j]);
  }
  return idx;
}

double ParseNumber(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used == s.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kDataFormat, "line " + std::to_string(line) +
                                          ": '" + s + "' is not a number");
}

}  // namespace

DatasetSchema DatasetSchema::FromJson(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (!doc.is_object() || !doc.contains("columns")) {
    throw Error(ErrorCode::kDataFormat, "schema needs a columns array");
  }
  DatasetSchema s;
  try {
    s.name = doc.value("name", "");
    s.header = doc.value("header", false);
    s.missing = doc.value("missing", "?");
    const json& cols = doc.at("columns");
    s.n_columns = static_cast<int>(cols.size());
    for (int c = 0; c < s.n_columns; ++c) {
      const json& col = cols[c];
      const std::string role = col.at("role").get<std::string>();
      s.column_names.push_back(col.at("name").get<std::string>());
      if (role == "feature") {
        FeatureSpec f;
        f.name = col.at("name").get<std::string>();
        f.column = c;
        const std::string kind = col.at("kind").get<std::string>();
        if (kind == "discrete") {
          f.kind = FeatureKind::kDiscrete;
          f.vocab = col.at("vocab").get<std::vector<std::string>>();
          if (f.vocab.empty()) {
            throw Error(ErrorCode::kDataFormat,
                        "discrete feature " + f.name + " has no vocabulary");
          }
        } else if (kind == "numeric") {
          f.kind = FeatureKind::kNumeric;
        } else {
          throw Error(ErrorCode::kDataFormat, "unknown feature kind " + kind);
        }
        s.features.push_back(std::move(f));
      } else if (role == "label") {
        if (s.label_column >= 0) {
          throw Error(ErrorCode::kDataFormat, "schema has two label columns");
        }
        s.label_column = c;
        s.label_values = col.at("values").get<std::vector<std::string>>();
        s.positive_label = col.at("positive").get<std::string>();
      } else if (role != "ignore") {
        throw Error(ErrorCode::kDataFormat, "unknown column role " + role);
      }
    }
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::kDataFormat,
                std::string("malformed schema: ") + ex.what());
  }
  if (s.label_column < 0 || s.features.empty()) {
    throw Error(ErrorCode::kDataFormat, "schema needs features and a label");
  }
  return s;
}

DatasetSchema DatasetSchema::Load(const std::string& path) {
  return FromJson(ReadFile(path));
}

RawTable LoadCsv(const std::string& path, const DatasetSchema& schema) {
  return ParseCsv(ReadFile(path), schema);
}

RawTable ParseCsv(const std::string& text, const DatasetSchema& schema) {
  RawTable t;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool skip_header = schema.header;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    if (skip_header) {
      skip_header = false;
      continue;
    }
    const std::vector<std::string> cells = SplitCommas(line);
    if (static_cast<int>(cells.size()) != schema.n_columns) {
      const std::string which =
          cells.size() < schema.column_names.size()
              ? "missing column '" + schema.column_names[cells.size()] + "'"
              : "unexpected column after '" + schema.column_names.back() + "'";
      throw Error(ErrorCode::kDataFormat,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(schema.n_columns) + " columns, got " +
                      std::to_string(cells.size()) + " (" + which + ")");
    }
    ++t.rows_read;
    if (std::any_of(cells.begin(), cells.end(),
                    [&](const std::string& c) { return c == schema.missing; })) {
      ++t.rows_dropped;
      continue;
    }
    std::vector<std::string> row;
    for (const FeatureSpec& f : schema.features) {
      const std::string& v = cells[f.column];
      if (f.kind == FeatureKind::kDiscrete) {
        if (std::find(f.vocab.begin(), f.vocab.end(), v) == f.vocab.end()) {
          throw Error(ErrorCode::kDataFormat,
                      "line " + std::to_string(line_no) + ": value '" + v +
                          "' not in vocabulary of " + f.name);
        }
      } else {
        ParseNumber(v, line_no);
      }
      row.push_back(v);
    }
    const std::string& label = cells[schema.label_column];
    if (std::find(schema.label_values.begin(), schema.label_values.end(),
                  label) == schema.label_values.end()) {
      throw Error(ErrorCode::kDataFormat, "line " + std::to_string(line_no) +
                                              ": unknown label '" + label +
                                              "'");
    }
    t.cells.push_back(std::move(row));
    t.labels.push_back(label == schema.positive_label ? 1 : 0);
  }
  if (t.rows_read == 0) throw Error(ErrorCode::kDataFormat, "empty dataset");
  return t;
}

std::pair<RawTable, RawTable> Split(const RawTable& t, double test_fraction,
                                    std::uint64_t seed) {
  if (!(test_fraction > 0 && test_fraction < 1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "test fraction must be in (0, 1)");
  }
  const std::size_t n = t.cells.size();
  const auto n_test =
      static_cast<std::size_t>(std::lround(test_fraction * static_cast<double>(n)));
  if (n_test == 0 || n_test >= n) {
    throw Error(ErrorCode::kInvalidArgument, "split leaves an empty part");
  }
  Rng rng(seed);
  const std::vector<std::size_t> idx = Shuffled(n, rng);
  RawTable train;
  RawTable test;
  for (std::size_t k = 0; k < n; ++k) {
    RawTable& dst = k < n_test ? test : train;
    dst.cells.push_back(t.cells[idx[k]]);
    dst.labels.push_back(t.labels[idx[k]]);
  }
  train.rows_read = train.cells.size();
  test.rows_read = test.cells.size();
  return {std::move(train), std::move(test)};
}

Normalizer Normalizer::Fit(const RawTable& t, const DatasetSchema& schema) {
  Normalizer n;
  for (std::size_t j = 0; j < schema.features.size(); ++j) {
    const FeatureSpec& f = schema.features[j];
    if (f.kind == FeatureKind::kDiscrete) {
      n.lo.push_back(0);
      n.hi.push_back(static_cast<double>(f.vocab.size()) - 1);
      continue;
    }
    double lo = INFINITY;
    double hi = -INFINITY;
    for (const auto& row : t.cells) {
      const double v = ParseNumber(row[j], 0);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (!(hi > lo)) {
      n.warnings.push_back("feature " + f.name +
                           " is constant; mapped to 0");
    }
    n.lo.push_back(lo);
    n.hi.push_back(hi);
  }
  return n;
}

void Dataset::Append(const Dataset& other) {
  x.insert(x.end(), other.x.begin(), other.x.end());
  category.insert(category.end(), other.category.begin(),
                  other.category.end());
  labels.insert(labels.end(), other.labels.begin(), other.labels.end());
}

Dataset Normalize(const RawTable& t, const DatasetSchema& schema,
                  const Normalizer& norm) {
  Dataset d;
  for (std::size_t i = 0; i < t.cells.size(); ++i) {
    std::vector<double> x;
    std::vector<int> cat;
    for (std::size_t j = 0; j < schema.features.size(); ++j) {
      const FeatureSpec& f = schema.features[j];
      double v;
      if (f.kind == FeatureKind::kDiscrete) {
        const auto pos = std::find(f.vocab.begin(), f.vocab.end(),
                                   t.cells[i][j]) - f.vocab.begin();
        cat.push_back(static_cast<int>(pos));
        v = static_cast<double>(pos);
      } else {
        cat.push_back(-1);
        v = ParseNumber(t.cells[i][j], 0);
      }
      const double range = norm.hi[j] - norm.lo[j];
      double z = range > 0 ? (v - norm.lo[j]) / range : 0.0;
      x.push_back(std::clamp(z, 0.0, 1.0));
    }
    d.x.push_back(std::move(x));
    d.category.push_back(std::move(cat));
    d.labels.push_back(t.labels[i]);
  }
  return d;
}

std::vector<Dataset> Partition(const Dataset& d, int n, std::uint64_t seed) {
  if (n < 1 || static_cast<std::size_t>(n) > d.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot partition " + std::to_string(d.size()) +
                    " rows among " + std::to_string(n) + " owners");
  }
  Rng rng(seed);
  const std::vector<std::size_t> idx = Shuffled(d.size(), rng);
  std::vector<Dataset> parts(n);
  const std::size_t base = d.size() / n;
  const std::size_t extra = d.size() % n;
  std::size_t k = 0;
  for (int p = 0; p < n; ++p) {
    const std::size_t size = base + (static_cast<std::size_t>(p) < extra);
    for (std::size_t c = 0; c < size; ++c, ++k) {
      parts[p].x.push_back(d.x[idx[k]]);
      parts[p].category.push_back(d.category[idx[k]]);
      parts[p].labels.push_back(d.labels[idx[k]]);
    }
  }
  return parts;
}

}  // namespace pheml::data
