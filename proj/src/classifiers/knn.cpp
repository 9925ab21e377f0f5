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

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "tss/classifiers.hpp"
#include "tss/error.hpp"

namespace tss {

std::string_view metric_name(Metric m) { return m == Metric::kDtw ? "dtw" : "euclidean"; }

std::optional<Metric> parse_metric(std::string_view name) {
  if (name == "dtw") return Metric::kDtw;
  if (name == "euclidean") return Metric::kEuclidean;
  return std::nullopt;
}

double dtw_distance(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> prev(m + 1, kInf), cur(m + 1, kInf);
  prev[0] = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = kInf;
    for (std::size_t j = 1; j <= m; ++j) {
      const double d = a[i - 1] - b[j - 1];
      cur[j] = d * d + std::min({prev[j - 1], prev[j], cur[j - 1]});
    }
    std::swap(prev, cur);
  }
  return std::sqrt(prev[m]);
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ConfigError("euclidean distance needs equal lengths");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

double distance(Metric m, std::span<const double> a, std::span<const double> b) {
  return m == Metric::kDtw ? dtw_distance(a, b) : euclidean_distance(a, b);
}

void KnnClassifier::fit(std::span<const LabeledInstance> train) {
  if (train.empty()) throw ConfigError("knn needs a nonempty training set");
  if (k_ == 0) throw ConfigError("knn needs k >= 1");
  train_.assign(train.begin(), train.end());
}

int KnnClassifier::vote(std::span<const std::pair<double, int>> neighbours) {
  std::map<int, double> score;
  const bool exact = std::any_of(neighbours.begin(), neighbours.end(), [](const auto& p) { return p.first == 0.0; });
  for (const auto& [d, label] : neighbours) {
    if (exact) {
      if (d == 0.0) score[label] += 1.0;
    } else {
      score[label] += 1.0 / (d + 1e-9);
    }
  }
  int best = -1;
  double best_score = -1.0;
  for (const auto& [label, s] : score) {  // ascending label: ties keep the lowest
    if (s > best_score) {
      best = label;
      best_score = s;
    }
  }
  return best;
}

int KnnClassifier::predict(std::span<const double> series, const SeriesKey*) const {
  if (train_.empty()) throw ConfigError("knn used before fit");
  std::vector<std::pair<double, std::size_t>> d;
  d.reserve(train_.size());
  for (std::size_t i = 0; i < train_.size(); ++i) {
    d.emplace_back(distance(metric_, series, train_[i].series.values()), i);
  }
  const std::size_t k = std::min(k_, d.size());
  std::partial_sort(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(k), d.end());
  std::vector<std::pair<double, int>> neighbours;
  for (std::size_t i = 0; i < k; ++i) neighbours.emplace_back(d[i].first, train_[d[i].second].label);
  return vote(neighbours);
}

std::unique_ptr<Classifier> fit_knn(std::span<const LabeledInstance> train, std::size_t k, Metric metric) {
  auto clf = std::make_unique<KnnClassifier>(k, metric);
  clf->fit(train);
  return clf;
}

}  // namespace tss
