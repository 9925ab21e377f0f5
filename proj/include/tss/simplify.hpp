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
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tss/timeseries.hpp"

namespace tss {

enum class AlgorithmId { kRdp, kVw, kBu, kOs };

inline constexpr std::array<AlgorithmId, 4> kAllAlgorithms = {AlgorithmId::kOs, AlgorithmId::kRdp,
                                                              AlgorithmId::kBu, AlgorithmId::kVw};

/// Lower-case short name: "rdp", "vw", "bu", "os".
std::string_view algorithm_name(AlgorithmId alg);
std::optional<AlgorithmId> parse_algorithm(std::string_view name);

/// A kept-index subset of a series plus the values at those indices.
struct Simplification {
  std::size_t original_length = 0;
  std::vector<std::size_t> kept_indices;  // strictly increasing, size >= 2
  std::vector<double> kept_values;

  std::size_t segment_count() const { return kept_indices.size() - 1; }
};

Simplification make_simplification(const TimeSeries& ts, std::vector<std::size_t> kept);

/// Piecewise-linear reconstruction; the first and last segments are extended
/// to cover indices outside [front, back] of the kept set.
TimeSeries reconstruct(const Simplification& s);

// Raw-threshold algorithms.
Simplification rdp(const TimeSeries& ts, double epsilon);
Simplification vw(const TimeSeries& ts, double area_threshold);
Simplification bottom_up(const TimeSeries& ts, double error_threshold);
Simplification optimal_simplify(const TimeSeries& ts, double alpha);

/// Objective minimised by optimal_simplify: squared reconstruction error plus
/// alpha per segment.
double os_objective(const TimeSeries& ts, const Simplification& s, double alpha);

/// Perpendicular distance from (x, y) to the line through (x0, y0), (x1, y1).
double perpendicular_distance(double x, double y, double x0, double y0, double x1, double y1);

/// Area of the triangle through three points.
double triangle_area(double x0, double y0, double x1, double y1, double x2, double y2);

/// Sum of |y_t - chord(t)| over a..c for the chord through (a, y_a), (c, y_c).
double chord_abs_error(std::span<const double> y, std::size_t a, std::size_t c);

/// A series prepared for repeated simplification at different alpha_c values.
/// Preparation does the per-instance work (saturation value, cost tables,
/// merge order) once; at() is cheap.
class PreparedSeries {
 public:
  virtual ~PreparedSeries() = default;

  AlgorithmId algorithm() const { return algorithm_; }
  const TimeSeries& series() const { return series_; }

  /// Raw threshold at which the algorithm is forced to one segment.
  double saturation() const { return saturation_; }

  /// M * (1 - alpha_c)^3.
  double raw_threshold(double alpha_c) const;

  virtual Simplification at_raw(double raw) const = 0;
  Simplification at(double alpha_c) const { return at_raw(raw_threshold(alpha_c)); }

 protected:
  PreparedSeries(AlgorithmId alg, TimeSeries ts) : algorithm_(alg), series_(std::move(ts)) {}

  AlgorithmId algorithm_;
  TimeSeries series_;
  double saturation_ = 0.0;
};

std::unique_ptr<PreparedSeries> prepare(AlgorithmId alg, const TimeSeries& ts);

/// Raw threshold for alpha_c in [0, 1].
double normalize_param(AlgorithmId alg, const TimeSeries& ts, double alpha_c);

Simplification simplify(AlgorithmId alg, const TimeSeries& ts, double alpha_c);

/// {n, kept_indices, kept_values, algorithm, alpha_c}
std::string simplification_json(const Simplification& s, AlgorithmId alg, double alpha_c);

}  // namespace tss
