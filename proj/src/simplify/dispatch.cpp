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

#include "json.hpp"

#include "tss/error.hpp"
#include "tss/simplify.hpp"

namespace tss {

std::unique_ptr<PreparedSeries> prepare_rdp(const TimeSeries& ts);
std::unique_ptr<PreparedSeries> prepare_vw(const TimeSeries& ts);
std::unique_ptr<PreparedSeries> prepare_bottom_up(const TimeSeries& ts);
std::unique_ptr<PreparedSeries> prepare_optimal(const TimeSeries& ts);

std::string_view algorithm_name(AlgorithmId alg) {
  switch (alg) {
    case AlgorithmId::kRdp: return "rdp";
    case AlgorithmId::kVw: return "vw";
    case AlgorithmId::kBu: return "bu";
    case AlgorithmId::kOs: return "os";
  }
  return "?";
}

std::optional<AlgorithmId> parse_algorithm(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (AlgorithmId a : kAllAlgorithms) {
    if (algorithm_name(a) == lower) return a;
  }
  return std::nullopt;
}

double PreparedSeries::raw_threshold(double alpha_c) const {
  if (!(alpha_c >= 0.0 && alpha_c <= 1.0)) throw ConfigError("alpha_c must lie in [0, 1]");
  const double r = 1.0 - alpha_c;
  return saturation_ * (r * r * r);
}

std::unique_ptr<PreparedSeries> prepare(AlgorithmId alg, const TimeSeries& ts) {
  switch (alg) {
    case AlgorithmId::kRdp: return prepare_rdp(ts);
    case AlgorithmId::kVw: return prepare_vw(ts);
    case AlgorithmId::kBu: return prepare_bottom_up(ts);
    case AlgorithmId::kOs: return prepare_optimal(ts);
  }
  return nullptr;
}

double normalize_param(AlgorithmId alg, const TimeSeries& ts, double alpha_c) {
  return prepare(alg, ts)->raw_threshold(alpha_c);
}

Simplification simplify(AlgorithmId alg, const TimeSeries& ts, double alpha_c) {
  return prepare(alg, ts)->at(alpha_c);
}

std::string simplification_json(const Simplification& s, AlgorithmId alg, double alpha_c) {
  nlohmann::ordered_json j;
  j["n"] = s.original_length;
  j["kept_indices"] = s.kept_indices;
  j["kept_values"] = s.kept_values;
  j["algorithm"] = algorithm_name(alg);
  j["alpha_c"] = alpha_c;
  return j.dump();
}

}  // namespace tss
