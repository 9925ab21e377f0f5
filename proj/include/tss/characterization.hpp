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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tss/timeseries.hpp"

namespace tss {

struct AdfResult {
  double statistic = 0.0;  // t-ratio of the lagged level; -inf when degenerate
  bool stationary = false;
  std::size_t lags = 0;
  std::size_t nobs = 0;
  double critical_value = 0.0;
  bool degenerate = false;
};

/// Schwert lag rule, capped at (n - 1) / 3.
std::size_t adf_lag_order(std::size_t n);

/// 5% critical value for the constant-only ADF regression with `nobs` rows.
double adf_critical_value_5pct(std::size_t nobs);

AdfResult adf_test(std::span<const double> y);

struct Acf {
  std::vector<double> values;  // lags 0..n-1
  bool degenerate = false;     // zero variance
};

/// Biased sample autocorrelation computed through an FFT of the zero-padded,
/// mean-centred series.
Acf acf(std::span<const double> y);

inline constexpr double kSeasonalAcfCutoff = 0.4;

/// max acf[lag] over lags 2..n/2 exceeds 0.4.
bool is_seasonal(std::span<const double> y);

/// Pincus approximate entropy with self-matches, r = r_factor * std(y),
/// clamped below at 0.
double approx_entropy(std::span<const double> y, std::size_t m = 2, double r_factor = 0.2);

enum class Stationarity { kStationary, kNonStationary, kPartiallyStationary };
enum class EntropyBin { kLow, kMedium, kHigh };

std::string_view stationarity_name(Stationarity s);
std::string_view entropy_bin_name(EntropyBin b);

inline constexpr double kStationaryAtLeast = 0.80;
inline constexpr double kNonStationaryAtMost = 0.50;
inline constexpr double kEntropyLowMax = 0.23;
inline constexpr double kEntropyMediumMax = 0.27;

Stationarity stationarity_label(double stationary_fraction);
EntropyBin entropy_bin(double mean_entropy);

struct DatasetCharacteristics {
  Stationarity stationarity = Stationarity::kStationary;
  double stationary_fraction = 0.0;
  bool seasonal = false;
  double seasonal_fraction = 0.0;
  double mean_entropy = 0.0;
  EntropyBin entropy = EntropyBin::kLow;
  bool entropy_above_one = false;
};

DatasetCharacteristics characterize_dataset(const Dataset& d, std::size_t jobs = 1);

/// name,stationary_fraction,stationarity,seasonal_fraction,seasonal,mean_entropy,entropy_bin
std::string characteristics_csv_header();
std::string characteristics_csv_row(std::string_view name, const DatasetCharacteristics& c);

}  // namespace tss
