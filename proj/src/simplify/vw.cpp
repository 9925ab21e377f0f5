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
#include <queue>
#include <tuple>
#include <vector>

#include "tss/error.hpp"
#include "tss/simplify.hpp"

namespace tss {

namespace {

// Runs Visvalingam-Whyatt elimination down to the two endpoints and records,
// for every interior point, the effective area at which it was removed. The
// recorded areas are monotone in removal order, so the simplification at any
// threshold is just the set of points whose effective area exceeds it.
class PreparedVw final : public PreparedSeries {
 public:
  explicit PreparedVw(const TimeSeries& ts) : PreparedSeries(AlgorithmId::kVw, ts) {
    const auto y = series_.values();
    const std::size_t n = y.size();
    effective_.assign(n, 0.0);
    if (n < 3) return;

    std::vector<std::size_t> prev(n), next(n);
    std::vector<unsigned> version(n, 0);
    std::vector<char> removed(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      prev[i] = i == 0 ? 0 : i - 1;
      next[i] = i + 1;
    }

    auto area_of = [&](std::size_t i) {
      return triangle_area(static_cast<double>(prev[i]), y[prev[i]], static_cast<double>(i), y[i],
                           static_cast<double>(next[i]), y[next[i]]);
    };

    using Entry = std::tuple<double, std::size_t, unsigned>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (std::size_t i = 1; i + 1 < n; ++i) heap.emplace(area_of(i), i, 0u);

    while (!heap.empty()) {
      const auto [area, i, ver] = heap.top();
      heap.pop();
      if (removed[i] || ver != version[i]) continue;
      removed[i] = 1;
      effective_[i] = area;
      saturation_ = std::max(saturation_, area);

      const std::size_t p = prev[i];
      const std::size_t q = next[i];
      next[p] = q;
      prev[q] = p;
      for (std::size_t nb : {p, q}) {
        if (nb == 0 || nb == n - 1) continue;
        heap.emplace(std::max(area_of(nb), area), nb, ++version[nb]);
      }
    }
  }

  Simplification at_raw(double area_threshold) const override {
    const std::size_t n = series_.size();
    std::vector<std::size_t> kept{0};
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (effective_[i] > area_threshold) kept.push_back(i);
    }
    kept.push_back(n - 1);
    return make_simplification(series_, std::move(kept));
  }

 private:
  std::vector<double> effective_;
};

}  // namespace

std::unique_ptr<PreparedSeries> prepare_vw(const TimeSeries& ts) { return std::make_unique<PreparedVw>(ts); }

Simplification vw(const TimeSeries& ts, double area_threshold) {
  if (!(area_threshold >= 0.0)) throw ConfigError("vw area threshold must be non-negative");
  return PreparedVw(ts).at_raw(area_threshold);
}

}  // namespace tss
