// Copyright 2026 The tss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace tss {

/// Univariate series with implicit time coordinates x_i = i. Construction
/// validates n >= 2 and that every value is finite.
class TimeSeries {
 public:
  TimeSeries() = default;
  explicit TimeSeries(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }
  const std::vector<double>& vec() const { return values_; }

  friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

 private:
  std::vector<double> values_;
};

struct LabeledInstance {
  std::size_t id = 0;  // row position inside its split file
  TimeSeries series;
  int label = 0;
};

enum class Split { kTrain, kTest };

const char* split_name(Split split);

struct Dataset {
  std::string name;
  std::vector<LabeledInstance> train;
  std::vector<LabeledInstance> test;
  std::size_t series_length = 0;
  std::vector<int> classes;               // 0..k-1
  std::vector<std::string> raw_labels;    // raw_labels[c] is the file token of class c

  const std::vector<LabeledInstance>& split(Split s) const { return s == Split::kTrain ? train : test; }
  std::size_t num_classes() const { return classes.size(); }
};

struct SamplePool {
  std::vector<LabeledInstance> instances;
  Split source_split = Split::kTest;
  std::uint64_t seed = 0;
};

/// One row of a UCR file before label remapping.
struct RawRow {
  std::string label_token;
  double label_value = 0.0;
  std::vector<double> values;
};

std::vector<RawRow> read_ucr_rows(const std::filesystem::path& path);

/// Parses a single UCR TSV file. Labels are remapped to 0..k-1 by ascending
/// numeric value of the raw label.
std::vector<LabeledInstance> parse_ucr_tsv(const std::filesystem::path& path);

/// Writes instances back out as UCR TSV, with `raw_labels` giving the token
/// for each class (class ids are written when it is empty).
void write_ucr_tsv(const std::filesystem::path& path, std::span<const LabeledInstance> instances,
                   std::span<const std::string> raw_labels = {});

/// Loads `<dir>/<name>_TRAIN.tsv` and `<dir>/<name>_TEST.tsv` with a label map
/// shared by both splits.
Dataset load_dataset(const std::filesystem::path& dir, const std::string& name, bool normalize = true);

/// Names of every dataset in `dir` having both split files, sorted.
std::vector<std::string> list_datasets(const std::filesystem::path& dir);

TimeSeries znormalize(const TimeSeries& ts);

SamplePool stratified_sample(std::span<const LabeledInstance> split, std::size_t size, std::uint64_t seed,
                             Split source = Split::kTest);

}  // namespace tss
