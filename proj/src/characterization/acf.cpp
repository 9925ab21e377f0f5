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

#include <cmath>
#include <complex>
#include <mutex>
#include <numeric>

#include <fftw3.h>

#include "tss/characterization.hpp"

namespace tss {

namespace {

// fftw planning is not thread-safe; execution of a finished plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::size_t next_pow2(std::size_t v) {
  std::size_t p = 1;
  while (p < v) p <<= 1;
  return p;
}

}  // namespace

Acf acf(std::span<const double> y) {
  const std::size_t n = y.size();
  Acf out;
  out.values.assign(n, 0.0);
  if (n == 0) return out;
  out.values[0] = 1.0;

  const double mean = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double var = 0.0;
  for (double v : y) var += (v - mean) * (v - mean);
  if (!(var > 0.0)) {
    out.degenerate = true;
    return out;
  }

  // Padding to >= 2n keeps the circular correlation free of wrap-around.
  const std::size_t m = next_pow2(2 * n);
  std::vector<double> buf(m, 0.0);
  std::vector<std::complex<double>> spec(m / 2 + 1);
  for (std::size_t i = 0; i < n; ++i) buf[i] = y[i] - mean;

  auto* spec_ptr = reinterpret_cast<fftw_complex*>(spec.data());
  fftw_plan forward, backward;
  {
    std::lock_guard lock(planner_mutex());
    forward = fftw_plan_dft_r2c_1d(static_cast<int>(m), buf.data(), spec_ptr, FFTW_ESTIMATE);
    backward = fftw_plan_dft_c2r_1d(static_cast<int>(m), spec_ptr, buf.data(), FFTW_ESTIMATE);
  }
  fftw_execute(forward);
  for (auto& c : spec) c = std::norm(c);
  fftw_execute(backward);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }

  const double lag0 = buf[0];
  for (std::size_t k = 1; k < n; ++k) out.values[k] = buf[k] / lag0;
  return out;
}

bool is_seasonal(std::span<const double> y) {
  const auto r = acf(y);
  if (r.degenerate) return false;
  const std::size_t last = y.size() / 2;
  for (std::size_t lag = 2; lag <= last && lag < y.size(); ++lag) {
    if (r.values[lag] > kSeasonalAcfCutoff) return true;
  }
  return false;
}

}  // namespace tss
