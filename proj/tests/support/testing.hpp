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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "tss/rng.hpp"
#include "tss/timeseries.hpp"

namespace tss::testing {

// Unique directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

std::vector<double> random_values(Rng& rng, std::size_t n);
TimeSeries random_series(Rng& rng, std::size_t n);
TimeSeries random_walk(Rng& rng, std::size_t n);

// Binary set: class 0 is a centred triangle pulse, class 1 is flat with a
// narrow bump at a random position. Both carry Gaussian noise.
std::vector<LabeledInstance> pulse_instances(Rng& rng, std::size_t count, std::size_t n, double noise);

// Writes <dir>/<name>_TRAIN.tsv and _TEST.tsv with the pulse generator.
void write_pulse_dataset(const std::filesystem::path& dir, const std::string& name, std::size_t n,
                         std::size_t train, std::size_t test, std::uint64_t seed, double noise = 0.1);

std::string read_file(const std::filesystem::path& path);

}  // namespace tss::testing
