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
#include <numeric>

#include "tss/characterization.hpp"
#include "tss/error.hpp"

namespace tss {

namespace {

// Phi_m(r): mean log of the fraction of length-m templates within Chebyshev
// distance r of each template (self-match included).
double phi(std::span<const double> y, std::size_t m, double r) {
  const std::size_t count = y.size() - m + 1;
  double total = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t matches = 0;
    for (std::size_t j = 0; j < count; ++j) {
      bool close = true;
      for (std::size_t k = 0; k < m && close; ++k) close = std::abs(y[i + k] - y[j + k]) <= r;
      matches += close ? 1 : 0;
    }
    total += std::log(static_cast<double>(matches) / static_cast<double>(count));
  }
  return total / static_cast<double>(count);
}

}  // namespace

double approx_entropy(std::span<const double> y, std::size_t m, double r_factor) {
  if (y.size() < m + 2) throw ConfigError("approximate entropy needs n >= m + 2");
  const double n = static_cast<double>(y.size());
  const double mean = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : y) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / n);
  if (!(sd > 0.0)) return 0.0;
  const double r = r_factor * sd;
  return std::max(0.0, phi(y, m, r) - phi(y, m + 1, r));
}

}  // namespace tss
