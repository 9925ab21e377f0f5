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
#include <limits>
#include <numeric>

#include "tss/error.hpp"
#include "tss/parallel.hpp"
#include "tss/prototypes.hpp"
#include "tss/rng.hpp"

namespace tss {

DistanceMatrix pairwise_distances(std::span<const TimeSeries> items, Metric metric, std::size_t jobs) {
  const std::size_t n = items.size();
  DistanceMatrix d(n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<double> values(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t p) {
    values[p] = distance(metric, items[pairs[p].first].values(), items[pairs[p].second].values());
  });
  for (std::size_t p = 0; p < pairs.size(); ++p) d.set(pairs[p].first, pairs[p].second, values[p]);
  return d;
}

double medoid_cost(const DistanceMatrix& d, std::span<const std::size_t> medoids) {
  double total = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t m : medoids) best = std::min(best, d(i, m));
    total += best;
  }
  return total;
}

namespace {

// Rank of each item in a canonical order: items are sorted by their row of
// sorted distances, which does not depend on the input permutation. The seed
// decides between items whose rows are identical.
std::vector<std::size_t> canonical_order(const DistanceMatrix& d, std::uint64_t seed) {
  const std::size_t n = d.size();
  std::vector<std::vector<double>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].resize(n);
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = d(i, j);
    std::sort(rows[i].begin(), rows[i].end());
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows[a] < rows[b]; });

  // Shuffle runs of identical rows with the seed.
  Rng rng(seed);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && rows[order[j]] == rows[order[i]]) ++j;
    rng.shuffle(std::span<std::size_t>(order.data() + i, j - i));
    i = j;
  }
  return order;
}

// Cost summed in canonical order so that it is bit-identical under input
// permutations.
double ordered_cost(const DistanceMatrix& d, std::span<const std::size_t> order,
                    std::span<const std::size_t> medoids) {
  double total = 0.0;
  for (std::size_t i : order) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t m : medoids) best = std::min(best, d(i, m));
    total += best;
  }
  return total;
}

}  // namespace

KMedoidsResult kmedoids(const DistanceMatrix& d, std::size_t k, std::uint64_t seed) {
  const std::size_t n = d.size();
  if (k == 0 || k > n) {
    throw ConfigError("k-medoids needs 1 <= k <= " + std::to_string(n) + ", got k = " + std::to_string(k));
  }
  const auto order = canonical_order(d, seed);
  std::vector<std::size_t> priority(n);
  for (std::size_t r = 0; r < n; ++r) priority[order[r]] = r;
  // Prefer a over b on equal score when a comes first canonically.
  auto better = [&](double score_a, std::size_t a, double score_b, std::size_t b) {
    if (score_a != score_b) return score_a < score_b;
    return priority[a] < priority[b];
  };

  KMedoidsResult res;
  std::vector<char> is_medoid(n, 0);
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());

  // Build: first medoid minimises the total distance.
  {
    std::size_t best = 0;
    double best_total = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < n; ++c) {
      double total = 0.0;
      for (std::size_t i : order) total += d(i, c);
      if (c == 0 || better(total, c, best_total, best)) {
        best = c;
        best_total = total;
      }
    }
    res.medoids.push_back(best);
    is_medoid[best] = 1;
    for (std::size_t i = 0; i < n; ++i) nearest[i] = d(i, best);
  }
  // Then the point farthest from the current medoids.
  while (res.medoids.size() < k) {
    std::size_t best = n;
    for (std::size_t c = 0; c < n; ++c) {
      if (is_medoid[c]) continue;
      // Maximise distance: compare negated scores.
      if (best == n || better(-nearest[c], c, -nearest[best], best)) best = c;
    }
    res.medoids.push_back(best);
    is_medoid[best] = 1;
    for (std::size_t i = 0; i < n; ++i) nearest[i] = std::min(nearest[i], d(i, best));
  }

  res.cost = ordered_cost(d, order, res.medoids);
  res.cost_history.push_back(res.cost);

  // Swap: apply the single best improving (medoid, non-medoid) exchange.
  const double tolerance = 1e-12;
  for (;;) {
    double best_cost = res.cost;
    std::size_t best_slot = k, best_candidate = n;
    std::vector<std::size_t> trial = res.medoids;
    for (std::size_t slot = 0; slot < k; ++slot) {
      for (std::size_t c = 0; c < n; ++c) {
        if (is_medoid[c]) continue;
        trial[slot] = c;
        const double cost = ordered_cost(d, order, trial);
        const bool improves = cost < res.cost - tolerance * std::max(1.0, res.cost);
        if (improves && (best_candidate == n || better(cost, c, best_cost, best_candidate))) {
          best_cost = cost;
          best_slot = slot;
          best_candidate = c;
        }
      }
      trial[slot] = res.medoids[slot];
    }
    if (best_candidate == n) break;
    is_medoid[res.medoids[best_slot]] = 0;
    is_medoid[best_candidate] = 1;
    res.medoids[best_slot] = best_candidate;
    res.cost = best_cost;
    res.cost_history.push_back(res.cost);
  }

  std::sort(res.medoids.begin(), res.medoids.end());
  return res;
}

KMedoidsResult kmedoids(std::span<const TimeSeries> items, std::size_t k, Metric metric, std::uint64_t seed,
                        std::size_t jobs) {
  if (k == 0 || k > items.size()) {
    throw ConfigError("k-medoids needs 1 <= k <= " + std::to_string(items.size()) + ", got k = " + std::to_string(k));
  }
  return kmedoids(pairwise_distances(items, metric, jobs), k, seed);
}

}  // namespace tss
