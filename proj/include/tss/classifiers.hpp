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
#include <filesystem>
#include <map>
#include <optional>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "tss/simplify.hpp"
#include "tss/timeseries.hpp"

namespace tss {

/// Identifies a concrete input to a classifier: which instance it came from
/// and whether it is the original or a particular simplification.
struct SeriesKey {
  std::string dataset;
  std::size_t instance_id = 0;
  std::string variant = "original";

  auto operator<=>(const SeriesKey&) const = default;
  std::string str() const;
};

/// `alg=<name>;ac=<alpha_c with 2 decimals>`
std::string variant_name(AlgorithmId alg, double alpha_c);

/// Trained mapping from fixed-length series to class ids. predict() must be
/// deterministic and safe to call concurrently once fit() has returned.
class Classifier {
 public:
  virtual ~Classifier() = default;

  virtual void fit(std::span<const LabeledInstance> train) = 0;

  /// `key` is only consulted by classifiers backed by precomputed labels.
  virtual int predict(std::span<const double> series, const SeriesKey* key = nullptr) const = 0;

  virtual std::string name() const = 0;
};

// Multinomial logistic regression with an L2 penalty on the weights (biases
// are not penalised), fitted by L-BFGS from a zero start.
struct LogRegOptions {
  double l2 = 1e-2;
  int max_iterations = 1000;
  double gradient_tolerance = 1e-10;
};

/// Multinomial logistic regression on raw time points, full-batch gradient
/// descent on mean cross-entropy + l2 * ||W||^2 / 2 (bias unpenalised).
class LogisticRegression final : public Classifier {
 public:
  explicit LogisticRegression(LogRegOptions opts = {}) : opts_(opts) {}

  void fit(std::span<const LabeledInstance> train) override;
  int predict(std::span<const double> series, const SeriesKey* key = nullptr) const override;
  std::string name() const override { return "logreg"; }

  std::vector<double> probabilities(std::span<const double> series) const;

  // Exposed for gradient checks. Parameters are laid out as
  // [class][feature] weights followed by one bias per class.
  std::size_t num_classes() const { return classes_; }
  std::size_t num_features() const { return features_; }
  const std::vector<double>& parameters() const { return params_; }
  void set_shape(std::size_t classes, std::size_t features);
  void set_parameters(std::vector<double> params) { params_ = std::move(params); }
  double loss(std::span<const LabeledInstance> data) const;
  std::vector<double> gradient(std::span<const LabeledInstance> data) const;

  /// Loss after every epoch of the last fit().
  const std::vector<double>& loss_history() const { return history_; }

 private:
  void scores(std::span<const double> x, std::span<double> out) const;

  LogRegOptions opts_;
  std::size_t classes_ = 0;
  std::size_t features_ = 0;
  std::vector<double> params_;
  std::vector<double> history_;
};

enum class Metric { kDtw, kEuclidean };

std::string_view metric_name(Metric m);
std::optional<Metric> parse_metric(std::string_view name);

/// DTW with squared local cost and no window; returns sqrt of the path cost.
double dtw_distance(std::span<const double> a, std::span<const double> b);
double euclidean_distance(std::span<const double> a, std::span<const double> b);
double distance(Metric m, std::span<const double> a, std::span<const double> b);

/// Distance-weighted kNN with weights 1 / (d + 1e-9). Zero-distance
/// neighbours, when present, decide by majority among themselves.
class KnnClassifier final : public Classifier {
 public:
  KnnClassifier(std::size_t k = 5, Metric metric = Metric::kDtw) : k_(k), metric_(metric) {}

  void fit(std::span<const LabeledInstance> train) override;
  int predict(std::span<const double> series, const SeriesKey* key = nullptr) const override;
  std::string name() const override { return metric_ == Metric::kDtw ? "knn" : "knn-euclidean"; }

  /// Vote given (distance, label) pairs of the chosen neighbours.
  static int vote(std::span<const std::pair<double, int>> neighbours);

 private:
  std::size_t k_;
  Metric metric_;
  std::vector<LabeledInstance> train_;
};

/// Labels computed by an outside model, keyed by SeriesKey. CSV header
/// `dataset,instance_id,variant,label`.
class ExternalPredictions final : public Classifier {
 public:
  static std::unique_ptr<ExternalPredictions> load(const std::filesystem::path& path);
  explicit ExternalPredictions(std::map<SeriesKey, int> table) : table_(std::move(table)) {}

  void fit(std::span<const LabeledInstance>) override {}
  int predict(std::span<const double> series, const SeriesKey* key = nullptr) const override;
  std::string name() const override { return "external"; }

  std::size_t size() const { return table_.size(); }

 private:
  std::map<SeriesKey, int> table_;
};

std::unique_ptr<Classifier> fit_logreg(std::span<const LabeledInstance> train, const LogRegOptions& opts = {});
std::unique_ptr<Classifier> fit_knn(std::span<const LabeledInstance> train, std::size_t k = 5,
                                    Metric metric = Metric::kDtw);
std::unique_ptr<Classifier> load_external_predictions(const std::filesystem::path& path);

/// Builds and trains a classifier from a spec string: `logreg`, `knn`,
/// `knn:euclidean`, `knn:dtw`, or `external:<path>`.
std::unique_ptr<Classifier> make_classifier(const std::string& spec, std::span<const LabeledInstance> train,
                                            std::uint64_t seed = 42);

}  // namespace tss
