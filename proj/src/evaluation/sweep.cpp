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

#include "tss/error.hpp"
#include "tss/evaluation.hpp"
#include "tss/parallel.hpp"

namespace tss {

EvaluationCurve sweep(const std::string& dataset, std::size_t num_classes, AlgorithmId alg, const Classifier& clf,
                      const SamplePool& pool, const SweepOptions& opts) {
  const auto grid = alpha_grid();
  const std::size_t m = pool.instances.size();
  if (m == 0) throw ConfigError("sweep needs a nonempty sample pool");
  const std::size_t n = pool.instances.front().series.size();

  std::vector<std::string> variants;
  variants.reserve(grid.size());
  for (double a : grid) variants.push_back(variant_name(alg, a));

  // Per cell (instance, step): kept-point count and simplification label.
  std::vector<int> original(m);
  std::vector<std::size_t> kept(m * grid.size());
  std::vector<int> simplified(m * grid.size());

  parallel_for(m, opts.jobs, [&](std::size_t i) {
    const auto& inst = pool.instances[i];
    SeriesKey key{dataset, inst.id, "original"};
    original[i] = clf.predict(inst.series.values(), &key);

    const auto prepared = prepare(alg, inst.series);
    for (std::size_t s = 0; s < grid.size(); ++s) {
      const Simplification simp = prepared->at(grid[s]);
      const TimeSeries recon = reconstruct(simp);
      key.variant = variants[s];
      kept[i * grid.size() + s] = simp.kept_indices.size();
      simplified[i * grid.size() + s] = clf.predict(recon.values(), &key);
    }
    if (opts.progress != nullptr) ++*opts.progress;
  });

  EvaluationCurve curve;
  curve.dataset = dataset;
  curve.algorithm = alg;
  curve.classifier = clf.name();
  curve.seed = pool.seed;
  curve.series_length = n;
  curve.points.reserve(grid.size());
  for (std::size_t s = 0; s < grid.size(); ++s) {
    ConfusionCounts counts(num_classes);
    std::size_t kept_total = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const int a = original[i];
      const int b = simplified[i * grid.size() + s];
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= num_classes ||
          static_cast<std::size_t>(b) >= num_classes) {
        throw ConfigError("classifier returned a label outside the dataset's " + std::to_string(num_classes) +
                          " classes");
      }
      counts.add(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      kept_total += kept[i * grid.size() + s];
    }
    CurvePoint p;
    p.alpha_c = grid[s];
    p.mean_complexity = static_cast<double>(kept_total) / static_cast<double>(n * m);
    p.loyalty = static_cast<double>(counts.trace()) / static_cast<double>(counts.total());
    p.kappa = cohen_kappa(counts);
    p.mean_segments = static_cast<double>(kept_total - m) / static_cast<double>(m);
    curve.points.push_back(p);
  }
  return curve;
}

std::string curve_file_name(const EvaluationCurve& curve) {
  return "curve_" + curve.dataset + "_" + std::string(algorithm_name(curve.algorithm)) + "_" + curve.classifier +
         ".csv";
}

std::string curve_csv(const EvaluationCurve& curve) {
  std::string out = "alpha_c,mean_complexity,loyalty,kappa,mean_segments\n";
  char alpha[16];
  for (const auto& p : curve.points) {
    std::snprintf(alpha, sizeof alpha, "%.2f", p.alpha_c);
    out += alpha;
    out += ',' + format_number(p.mean_complexity) + ',' + format_number(p.loyalty) + ',' + format_number(p.kappa) +
           ',' + format_number(p.mean_segments) + '\n';
  }
  return out;
}

}  // namespace tss
