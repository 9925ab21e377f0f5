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
#include <limits>

#include <Eigen/Dense>

#include "tss/characterization.hpp"

namespace tss {

std::size_t adf_lag_order(std::size_t n) {
  const auto schwert = static_cast<std::size_t>(std::floor(12.0 * std::pow(static_cast<double>(n) / 100.0, 0.25)));
  return std::min(schwert, (n - 1) / 3);
}

double adf_critical_value_5pct(std::size_t nobs) {
  const double t = static_cast<double>(nobs);
  return -2.8621 - 2.738 / t - 8.36 / (t * t) - 16.786 / (t * t * t);
}

// Regression: dy_t = c + rho * y_{t-1} + sum_{i=1..p} phi_i * dy_{t-i} + e_t
// over t = p+1 .. n-1.
AdfResult adf_test(std::span<const double> y) {
  AdfResult r;
  const std::size_t n = y.size();
  r.lags = n >= 4 ? adf_lag_order(n) : 0;
  const std::size_t p = r.lags;
  const std::size_t cols = 2 + p;
  auto degenerate = [&] {
    r.degenerate = true;
    r.stationary = true;
    r.statistic = -std::numeric_limits<double>::infinity();
    return r;
  };
  if (n < p + 2) return degenerate();
  r.nobs = n - 1 - p;
  r.critical_value = adf_critical_value_5pct(r.nobs);
  if (r.nobs <= cols) return degenerate();

  Eigen::MatrixXd x(r.nobs, cols);
  Eigen::VectorXd dy(r.nobs);
  for (std::size_t row = 0; row < r.nobs; ++row) {
    const std::size_t t = p + 1 + row;
    dy(row) = y[t] - y[t - 1];
    x(row, 0) = 1.0;
    x(row, 1) = y[t - 1];
    for (std::size_t i = 1; i <= p; ++i) x(row, 1 + i) = y[t - i] - y[t - i - 1];
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> piv(x);
  if (piv.rank() < static_cast<Eigen::Index>(cols)) return degenerate();

  Eigen::HouseholderQR<Eigen::MatrixXd> qr(x);
  const Eigen::VectorXd beta = qr.solve(dy);
  const Eigen::VectorXd resid = dy - x * beta;
  const double rss = resid.squaredNorm();
  if (!(rss > 0.0)) return degenerate();

  const double sigma2 = rss / static_cast<double>(r.nobs - cols);
  const Eigen::MatrixXd rmat = qr.matrixQR().topLeftCorner(cols, cols).triangularView<Eigen::Upper>();
  const Eigen::MatrixXd rinv =
      rmat.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(cols),
                                                                          static_cast<Eigen::Index>(cols)));
  const double var_rho = sigma2 * rinv.row(1).squaredNorm();
  if (!(var_rho > 0.0)) return degenerate();

  r.statistic = beta(1) / std::sqrt(var_rho);
  r.stationary = r.statistic < r.critical_value;
  return r;
}

}  // namespace tss
