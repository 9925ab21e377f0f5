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

#include <cstdio>

#include "tss/characterization.hpp"
#include "tss/parallel.hpp"

namespace tss {

std::string_view stationarity_name(Stationarity s) {
  switch (s) {
    case Stationarity::kStationary: return "stationary";
    case Stationarity::kNonStationary: return "non_stationary";
    case Stationarity::kPartiallyStationary: return "partially_stationary";
  }
  return "?";
}

std::string_view entropy_bin_name(EntropyBin b) {
  switch (b) {
    case EntropyBin::kLow: return "low";
    case EntropyBin::kMedium: return "medium";
    case EntropyBin::kHigh: return "high";
  }
  return "?";
}

Stationarity stationarity_label(double stationary_fraction) {
  if (stationary_fraction >= kStationaryAtLeast) return Stationarity::kStationary;
  if (stationary_fraction <= kNonStationaryAtMost) return Stationarity::kNonStationary;
  return Stationarity::kPartiallyStationary;
}

EntropyBin entropy_bin(double mean_entropy) {
  if (mean_entropy <= kEntropyLowMax) return EntropyBin::kLow;
  if (mean_entropy <= kEntropyMediumMax) return EntropyBin::kMedium;
  return EntropyBin::kHigh;
}

DatasetCharacteristics characterize_dataset(const Dataset& d, std::size_t jobs) {
  std::vector<const TimeSeries*> all;
  for (const auto& inst : d.train) all.push_back(&inst.series);
  for (const auto& inst : d.test) all.push_back(&inst.series);

  struct PerInstance {
    bool stationary = false;
    bool seasonal = false;
    double entropy = 0.0;
  };
  std::vector<PerInstance> per(all.size());
  parallel_for(all.size(), jobs, [&](std::size_t i) {
    const auto y = all[i]->values();
    per[i] = {adf_test(y).stationary, is_seasonal(y), approx_entropy(y)};
  });

  DatasetCharacteristics c;
  if (per.empty()) return c;
  std::size_t stationary = 0, seasonal = 0;
  double entropy = 0.0;
  for (const auto& p : per) {
    stationary += p.stationary ? 1 : 0;
    seasonal += p.seasonal ? 1 : 0;
    entropy += p.entropy;
  }
  const double count = static_cast<double>(per.size());
  c.stationary_fraction = static_cast<double>(stationary) / count;
  c.stationarity = stationarity_label(c.stationary_fraction);
  c.seasonal_fraction = static_cast<double>(seasonal) / count;
  c.seasonal = c.seasonal_fraction > 0.5;
  c.mean_entropy = entropy / count;
  c.entropy = entropy_bin(c.mean_entropy);
  c.entropy_above_one = c.mean_entropy > 1.0;
  return c;
}

std::string characteristics_csv_header() {
  return "name,stationary_fraction,stationarity,seasonal_fraction,seasonal,mean_entropy,entropy_bin";
}

std::string characteristics_csv_row(std::string_view name, const DatasetCharacteristics& c) {
  char buf[256];
  std::snprintf(buf, sizeof buf, ",%.4f,%s,%.4f,%s,%.6f,%s", c.stationary_fraction,
                std::string(stationarity_name(c.stationarity)).c_str(), c.seasonal_fraction,
                c.seasonal ? "true" : "false", c.mean_entropy, std::string(entropy_bin_name(c.entropy)).c_str());
  return std::string(name) + buf;
}

}  // namespace tss
