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
#include <functional>
#include <string>
#include <vector>

#include "tss/evaluation.hpp"
#include "tss/simplify.hpp"
#include "tss/timeseries.hpp"

namespace tss {

inline constexpr std::size_t kDefaultMaxLength = 200;
inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::size_t kDefaultSampleSize = 100;

/// Resolves a dataset selector: a single name, or `all` for every dataset in
/// the directory whose series are shorter than `max_length`.
std::vector<std::string> select_datasets(const std::filesystem::path& data_dir, const std::string& selector,
                                         std::size_t max_length = kDefaultMaxLength);

struct EvaluateConfig {
  std::filesystem::path data_dir;
  std::string dataset;
  std::size_t max_length = kDefaultMaxLength;
  std::vector<AlgorithmId> algorithms{kAllAlgorithms.begin(), kAllAlgorithms.end()};
  std::string classifier = "logreg";
  std::uint64_t seed = kDefaultSeed;
  std::size_t sample_size = kDefaultSampleSize;
  Split split = Split::kTest;
  std::filesystem::path out;
  std::size_t jobs = 1;
  std::function<void(const std::string&)> log;  // optional progress lines
};

/// Runs the sweep for every selected dataset and algorithm and writes the
/// curve CSVs, summary.csv, table1.csv, table3.csv and table5.csv into `out`.
/// Returns the written paths.
std::vector<std::filesystem::path> run_evaluate(const EvaluateConfig& cfg);

/// The CSV emitted by `characterize`.
std::string run_characterize(const std::filesystem::path& data_dir, const std::string& selector,
                             std::size_t max_length = kDefaultMaxLength, std::size_t jobs = 1);

void write_text_file(const std::filesystem::path& path, const std::string& body);

}  // namespace tss
