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
#include <set>
#include <utility>
#include <vector>

#include "tss/error.hpp"
#include "tss/simplify.hpp"

namespace tss {

namespace {

struct Merge {
  std::size_t left_start;
  double error;
};

// Segs are contiguous index ranges identified by their start index. Merging
// the seg starting at `left` with its right neighbour yields one seg whose
// line is the chord between the original endpoint values.
class PreparedBottomUp final : public PreparedSeries {
 public:
  explicit PreparedBottomUp(const TimeSeries& ts) : PreparedSeries(AlgorithmId::kBu, ts) {
    const auto y = series_.values();
    const std::size_t n = y.size();
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    std::vector<std::size_t> end(n), next(n), prev(n);
    std::vector<double> cost(n, 0.0);  // merge cost of (seg, next seg), keyed by seg start
    for (std::size_t i = 0; i < n; ++i) {
      end[i] = i;
      next[i] = i + 1 < n ? i + 1 : kNone;
      prev[i] = i > 0 ? i - 1 : kNone;
    }

    // (error, left start): the set orders ties by leftmost pair.
    std::set<std::pair<double, std::size_t>> candidates;
    auto refresh = [&](std::size_t left) {
      if (left == kNone || next[left] == kNone) return;
      cost[left] = chord_abs_error(y, left, end[next[left]]);
      candidates.emplace(cost[left], left);
    };
    for (std::size_t i = 0; i + 1 < n; ++i) refresh(i);

    merges_.reserve(n - 1);
    while (!candidates.empty()) {
      const auto [error, left] = *candidates.begin();
      candidates.erase(candidates.begin());
      const std::size_t right = next[left];
      merges_.push_back({left, error});
      saturation_ = std::max(saturation_, error);

      if (next[right] != kNone) candidates.erase({cost[right], right});
      const std::size_t before = prev[left];
      if (before != kNone) candidates.erase({cost[before], before});

      end[left] = end[right];
      next[left] = next[right];
      if (next[left] != kNone) prev[next[left]] = left;

      refresh(left);
      refresh(before);
    }
  }

  Simplification at_raw(double error_threshold) const override {
    const std::size_t n = series_.size();
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> end(n), next(n);
    for (std::size_t i = 0; i < n; ++i) {
      end[i] = i;
      next[i] = i + 1 < n ? i + 1 : kNone;
    }
    for (const auto& m : merges_) {
      if (m.error > error_threshold) break;
      const std::size_t right = next[m.left_start];
      end[m.left_start] = end[right];
      next[m.left_start] = next[right];
    }

    std::vector<std::size_t> kept;
    for (std::size_t s = 0; s != kNone; s = next[s]) {
      kept.push_back(s);
      if (end[s] != s) kept.push_back(end[s]);
    }
    return make_simplification(series_, std::move(kept));
  }

 private:
  std::vector<Merge> merges_;
};

}  // namespace

std::unique_ptr<PreparedSeries> prepare_bottom_up(const TimeSeries& ts) {
  return std::make_unique<PreparedBottomUp>(ts);
}

Simplification bottom_up(const TimeSeries& ts, double error_threshold) {
  if (!(error_threshold >= 0.0)) throw ConfigError("bottom-up error threshold must be non-negative");
  return PreparedBottomUp(ts).at_raw(error_threshold);
}

}  // namespace tss
