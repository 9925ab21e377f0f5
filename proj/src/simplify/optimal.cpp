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

#include <limits>
#include <vector>

#include "tss/error.hpp"
#include "tss/simplify.hpp"

namespace tss {

namespace {

// Cost of a partial solution; compared by cost, then by segment count.
struct Cost {
  double value = std::numeric_limits<double>::infinity();
  std::size_t segments = 0;

  bool operator<(const Cost& o) const {
    if (value != o.value) return value < o.value;
    return segments < o.segments;
  }
};

// Exact penalised piecewise-linear fit over kept subsets. For every chord
// (j, k) the squared error is split into the part strictly inside the chord
// and the parts left of j and right of k that the chord would cover if it were
// the first or last segment. With those tables the optimum for one alpha is an
// O(n^2) backward recursion over "next kept index".
class PreparedOptimal final : public PreparedSeries {
 public:
  explicit PreparedOptimal(const TimeSeries& ts) : PreparedSeries(AlgorithmId::kOs, ts), n_(ts.size()) {
    const auto y = series_.values();
    inner_.assign(n_ * n_, 0.0);
    prefix_.assign(n_ * n_, 0.0);
    suffix_.assign(n_ * n_, 0.0);

    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = j + 1; k < n_; ++k) {
        const double slope = (y[k] - y[j]) / static_cast<double>(k - j);
        auto sq = [&](std::size_t t) {
          const double r = y[t] - (y[j] + slope * (static_cast<double>(t) - static_cast<double>(j)));
          return r * r;
        };
        double in = 0.0, pre = 0.0, suf = 0.0;
        for (std::size_t t = 0; t < j; ++t) pre += sq(t);
        for (std::size_t t = j + 1; t < k; ++t) in += sq(t);
        for (std::size_t t = k + 1; t < n_; ++t) suf += sq(t);
        inner_[at(j, k)] = in;
        prefix_[at(j, k)] = pre;
        suffix_[at(j, k)] = suf;
      }
    }

    Cost best;
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = j + 1; k < n_; ++k) {
        const Cost c{prefix_[at(j, k)] + inner_[at(j, k)] + suffix_[at(j, k)], 1};
        if (c < best) {
          best = c;
          best_single_ = {j, k};
        }
      }
    }
    saturation_ = best.value;
  }

  Simplification at_raw(double alpha) const override {
    // Any m-segment solution costs at least m * alpha >= 2 * alpha, which is
    // never below the best single chord once alpha reaches its error.
    if (alpha >= saturation_) {
      return make_simplification(series_, {best_single_.first, best_single_.second});
    }

    constexpr std::size_t kEnd = static_cast<std::size_t>(-1);
    // tail[(j,k)]: best cost of segment j->k and everything after it.
    std::vector<Cost> tail(n_ * n_);
    std::vector<std::size_t> succ(n_ * n_, kEnd);
    std::vector<Cost> from(n_);           // best tail starting at k with some segment k->l
    std::vector<std::size_t> from_arg(n_, kEnd);

    for (std::size_t k = n_; k-- > 0;) {
      for (std::size_t l = k + 1; l < n_; ++l) {
        if (tail[at(k, l)] < from[k]) {
          from[k] = tail[at(k, l)];
          from_arg[k] = l;
        }
      }
      for (std::size_t j = 0; j < k; ++j) {
        const double base = inner_[at(j, k)] + alpha;
        Cost c{base + suffix_[at(j, k)], 1};
        std::size_t s = kEnd;
        if (from_arg[k] != kEnd) {
          const Cost cont{base + from[k].value, from[k].segments + 1};
          if (cont < c) {
            c = cont;
            s = from_arg[k];
          }
        }
        tail[at(j, k)] = c;
        succ[at(j, k)] = s;
      }
    }

    Cost best;
    std::size_t first = 0, second = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        const Cost c{prefix_[at(i, j)] + tail[at(i, j)].value, tail[at(i, j)].segments};
        if (c < best) {
          best = c;
          first = i;
          second = j;
        }
      }
    }

    std::vector<std::size_t> kept{first, second};
    for (std::size_t a = first, b = second; succ[at(a, b)] != kEnd;) {
      const std::size_t c = succ[at(a, b)];
      kept.push_back(c);
      a = b;
      b = c;
    }
    return make_simplification(series_, std::move(kept));
  }

 private:
  std::size_t at(std::size_t j, std::size_t k) const { return j * n_ + k; }

  std::size_t n_;
  std::vector<double> inner_, prefix_, suffix_;
  std::pair<std::size_t, std::size_t> best_single_{0, 1};
};

}  // namespace

std::unique_ptr<PreparedSeries> prepare_optimal(const TimeSeries& ts) {
  return std::make_unique<PreparedOptimal>(ts);
}

Simplification optimal_simplify(const TimeSeries& ts, double alpha) {
  if (!(alpha >= 0.0)) throw ConfigError("segment penalty must be non-negative");
  return PreparedOptimal(ts).at_raw(alpha);
}

}  // namespace tss
