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

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tss/characterization.hpp"
#include "tss/classifiers.hpp"
#include "tss/simplify.hpp"
#include "tss/timeseries.hpp"

namespace tss {

/// Rows: class predicted for the original; columns: class predicted for the
/// simplification.
class ConfusionCounts {
 public:
  explicit ConfusionCounts(std::size_t classes = 0) : k_(classes), counts_(classes * classes, 0) {}
  ConfusionCounts(std::size_t classes, std::vector<std::int64_t> counts);

  std::size_t classes() const { return k_; }
  std::int64_t at(std::size_t row, std::size_t col) const { return counts_[row * k_ + col]; }
  void add(std::size_t row, std::size_t col, std::int64_t n = 1) { counts_[row * k_ + col] += n; }
  std::int64_t total() const;
  std::int64_t trace() const;

 private:
  std::size_t k_;
  std::vector<std::int64_t> counts_;
};

/// Cohen's kappa; 1 or 0 when chance agreement is 1 (p_0 == 1 or not).
double cohen_kappa(const ConfusionCounts& c);

double complexity_of(const Simplification& s);

/// 0.00, 0.01, ..., 1.00 as i / 100.
std::vector<double> alpha_grid();
inline constexpr std::size_t kGridSteps = 101;

struct CurvePoint {
  double alpha_c = 0.0;
  double mean_complexity = 0.0;
  double loyalty = 0.0;
  double kappa = 0.0;
  double mean_segments = 0.0;
};

struct EvaluationCurve {
  std::string dataset;
  AlgorithmId algorithm = AlgorithmId::kRdp;
  std::string classifier;
  std::uint64_t seed = 0;
  std::size_t series_length = 0;
  std::vector<CurvePoint> points;  // ordered by alpha_c
};

struct SweepOptions {
  std::size_t jobs = 1;
  std::atomic<std::size_t>* progress = nullptr;  // incremented once per finished instance
};

/// Simplifies every pool instance at every grid alpha_c and compares the
/// classifier's label on the simplification with its label on the original.
EvaluationCurve sweep(const std::string& dataset, std::size_t num_classes, AlgorithmId alg, const Classifier& clf,
                      const SamplePool& pool, const SweepOptions& opts = {});

/// Trapezoidal area under max(kappa, 0) over mean complexity from the
/// smallest complexity to 1, scaled to [0, 100].
double auc(const EvaluationCurve& curve);
double auc(std::vector<std::pair<double, double>> complexity_kappa);

/// Smallest mean complexity among points with loyalty >= target.
double complexity_at_loyalty(const EvaluationCurve& curve, double target);

/// Smallest grid alpha_c whose loyalty >= target; returns the index into points.
std::size_t min_alpha_index_for_loyalty(const EvaluationCurve& curve, double target);
double min_alpha_for_loyalty(const EvaluationCurve& curve, double target);

inline constexpr std::array<double, 4> kLoyaltyTargets = {0.80, 0.85, 0.90, 0.95};

/// Shortest round-trip decimal form of a double.
std::string format_number(double v);

std::string curve_csv(const EvaluationCurve& curve);
std::string curve_file_name(const EvaluationCurve& curve);

struct DatasetResult {
  std::string dataset;
  std::size_t series_length = 0;
  std::size_t num_classes = 0;
  DatasetCharacteristics characteristics;
  std::vector<EvaluationCurve> curves;  // one per algorithm, same classifier
};

/// CSV bodies mirroring the report shapes: per-curve summary, grouped mean AUC,
/// mean complexity at the loyalty targets, and per-dataset segment counts.
struct Report {
  std::string summary;
  std::string table1;
  std::string table3;
  std::string table5;
};

Report aggregate(const std::vector<DatasetResult>& results);

}  // namespace tss
