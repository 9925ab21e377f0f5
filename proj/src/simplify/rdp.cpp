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

#include <utility>
#include <vector>

#include "tss/error.hpp"
#include "tss/simplify.hpp"

namespace tss {

namespace {

struct Farthest {
  std::size_t index = 0;
  double distance = -1.0;
};

// Lowest-index farthest interior point from the chord first..last.
Farthest farthest_from_chord(std::span<const double> y, std::size_t first, std::size_t last) {
  Farthest f;
  const double x0 = static_cast<double>(first);
  const double x1 = static_cast<double>(last);
  for (std::size_t i = first + 1; i < last; ++i) {
    const double d = perpendicular_distance(static_cast<double>(i), y[i], x0, y[first], x1, y[last]);
    if (d > f.distance) f = {i, d};
  }
  return f;
}

class PreparedRdp final : public PreparedSeries {
 public:
  explicit PreparedRdp(const TimeSeries& ts) : PreparedSeries(AlgorithmId::kRdp, ts) {
    const auto f = farthest_from_chord(series_.values(), 0, series_.size() - 1);
    saturation_ = f.distance < 0.0 ? 0.0 : f.distance;
  }

  Simplification at_raw(double epsilon) const override {
    const auto y = series_.values();
    const std::size_t n = y.size();
    std::vector<char> keep(n, 0);
    keep[0] = keep[n - 1] = 1;

    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, n - 1}};
    while (!stack.empty()) {
      auto [first, last] = stack.back();
      stack.pop_back();
      if (last - first < 2) continue;
      const auto f = farthest_from_chord(y, first, last);
      if (f.distance > epsilon) {
        keep[f.index] = 1;
        stack.emplace_back(f.index, last);
        stack.emplace_back(first, f.index);
      }
    }

    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < n; ++i) {
      if (keep[i]) kept.push_back(i);
    }
    return make_simplification(series_, std::move(kept));
  }
};

}  // namespace

std::unique_ptr<PreparedSeries> prepare_rdp(const TimeSeries& ts) { return std::make_unique<PreparedRdp>(ts); }

Simplification rdp(const TimeSeries& ts, double epsilon) {
  if (!(epsilon >= 0.0)) throw ConfigError("rdp epsilon must be non-negative");
  return PreparedRdp(ts).at_raw(epsilon);
}

}  // namespace tss
