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
#include <stdexcept>

#include "tss/error.hpp"
#include "tss/simplify.hpp"

namespace tss {

double perpendicular_distance(double x, double y, double x0, double y0, double x1, double y1) {
  const double dx = x1 - x0;
  const double dy = y1 - y0;
  const double len = std::hypot(dx, dy);
  if (len == 0.0) return std::hypot(x - x0, y - y0);
  return std::abs(dy * (x - x0) - dx * (y - y0)) / len;
}

double triangle_area(double x0, double y0, double x1, double y1, double x2, double y2) {
  return 0.5 * std::abs((x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0));
}

double chord_abs_error(std::span<const double> y, std::size_t a, std::size_t c) {
  const double slope = (y[c] - y[a]) / static_cast<double>(c - a);
  double err = 0.0;
  for (std::size_t t = a + 1; t < c; ++t) {
    err += std::abs(y[t] - (y[a] + slope * static_cast<double>(t - a)));
  }
  return err;
}

Simplification make_simplification(const TimeSeries& ts, std::vector<std::size_t> kept) {
  if (kept.size() < 2) throw ConfigError("a simplification keeps at least 2 points");
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i] >= ts.size() || (i > 0 && kept[i] <= kept[i - 1])) {
      throw ConfigError("kept indices must be strictly increasing and inside the series");
    }
  }
  Simplification s;
  s.original_length = ts.size();
  s.kept_values.reserve(kept.size());
  for (std::size_t i : kept) s.kept_values.push_back(ts[i]);
  s.kept_indices = std::move(kept);
  return s;
}

TimeSeries reconstruct(const Simplification& s) {
  const auto& idx = s.kept_indices;
  const auto& val = s.kept_values;
  std::vector<double> out(s.original_length);
  std::size_t seg = 0;  // current segment is idx[seg] .. idx[seg + 1]
  for (std::size_t t = 0; t < out.size(); ++t) {
    while (seg + 2 < idx.size() && t > idx[seg + 1]) ++seg;
    const std::size_t a = idx[seg];
    const std::size_t b = idx[seg + 1];
    if (t == a) {
      out[t] = val[seg];
    } else if (t == b) {
      out[t] = val[seg + 1];
    } else {
      const double slope = (val[seg + 1] - val[seg]) / static_cast<double>(b - a);
      out[t] = val[seg] + slope * (static_cast<double>(t) - static_cast<double>(a));
    }
  }
  return TimeSeries(std::move(out));
}

double os_objective(const TimeSeries& ts, const Simplification& s, double alpha) {
  const TimeSeries r = reconstruct(s);
  double err = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) err += (ts[i] - r[i]) * (ts[i] - r[i]);
  return err + alpha * static_cast<double>(s.segment_count());
}

}  // namespace tss
