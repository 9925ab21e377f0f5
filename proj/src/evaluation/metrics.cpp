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
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "tss/error.hpp"
#include "tss/evaluation.hpp"

namespace tss {

ConfusionCounts::ConfusionCounts(std::size_t classes, std::vector<std::int64_t> counts)
    : k_(classes), counts_(std::move(counts)) {
  if (counts_.size() != k_ * k_) throw ConfigError("confusion counts must be a square matrix");
  for (auto c : counts_) {
    if (c < 0) throw ConfigError("confusion counts must be non-negative");
  }
}

std::int64_t ConfusionCounts::total() const { return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0}); }

std::int64_t ConfusionCounts::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < k_; ++i) t += at(i, i);
  return t;
}

double cohen_kappa(const ConfusionCounts& c) {
  const std::int64_t total = c.total();
  if (total <= 0) throw ConfigError("cohen_kappa needs a nonempty confusion matrix");
  // (N * trace - sum r_k c_k) / (N^2 - sum r_k c_k), kept in integers so that
  // the only rounding is the final division.
  __int128 chance = 0;
  for (std::size_t k = 0; k < c.classes(); ++k) {
    std::int64_t row = 0, col = 0;
    for (std::size_t j = 0; j < c.classes(); ++j) {
      row += c.at(k, j);
      col += c.at(j, k);
    }
    chance += static_cast<__int128>(row) * col;
  }
  const __int128 n = total;
  const __int128 den = n * n - chance;
  if (den == 0) return c.trace() == total ? 1.0 : 0.0;
  const __int128 num = n * c.trace() - chance;
  return static_cast<double>(num) / static_cast<double>(den);
}

double complexity_of(const Simplification& s) {
  return static_cast<double>(s.kept_indices.size()) / static_cast<double>(s.original_length);
}

std::vector<double> alpha_grid() {
  std::vector<double> g(kGridSteps);
  for (std::size_t i = 0; i < kGridSteps; ++i) g[i] = static_cast<double>(i) / 100.0;
  return g;
}

double auc(std::vector<std::pair<double, double>> pts) {
  if (pts.empty()) return 0.0;
  std::stable_sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  // Collapse equal complexities by averaging their kappa, then clamp at 0.
  std::vector<std::pair<double, double>> xs;
  for (std::size_t i = 0; i < pts.size();) {
    std::size_t j = i;
    double sum = 0.0;
    while (j < pts.size() && pts[j].first == pts[i].first) sum += pts[j++].second;
    xs.emplace_back(pts[i].first, std::max(0.0, sum / static_cast<double>(j - i)));
    i = j;
  }

  const double c_min = xs.front().first;
  if (c_min >= 1.0) return 100.0 * xs.front().second;
  // A curve that stops short of complexity 1 is held flat up to 1.
  if (xs.back().first < 1.0) xs.emplace_back(1.0, xs.back().second);

  double area = 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double right = std::min(xs[i].first, 1.0);
    const double left = std::min(xs[i - 1].first, 1.0);
    area += (right - left) * (xs[i].second + xs[i - 1].second) / 2.0;
  }
  return std::clamp(100.0 * area / (1.0 - c_min), 0.0, 100.0);
}

double auc(const EvaluationCurve& curve) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(curve.points.size());
  for (const auto& p : curve.points) pts.emplace_back(p.mean_complexity, p.kappa);
  return auc(std::move(pts));
}

double complexity_at_loyalty(const EvaluationCurve& curve, double target) {
  double best = 1.0;
  bool found = false;
  for (const auto& p : curve.points) {
    if (p.loyalty >= target && (!found || p.mean_complexity < best)) {
      best = p.mean_complexity;
      found = true;
    }
  }
  return best;
}

std::size_t min_alpha_index_for_loyalty(const EvaluationCurve& curve, double target) {
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    if (curve.points[i].loyalty >= target) return i;
  }
  return curve.points.empty() ? 0 : curve.points.size() - 1;
}

double min_alpha_for_loyalty(const EvaluationCurve& curve, double target) {
  if (curve.points.empty()) return 1.0;
  return curve.points[min_alpha_index_for_loyalty(curve, target)].alpha_c;
}

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace tss
