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
#include <limits>

#include "doctest.h"
#include "testing.hpp"
#include "tss/error.hpp"
#include "tss/evaluation.hpp"
#include "tss/simplify.hpp"

using namespace tss;

namespace {

using Indices = std::vector<std::size_t>;

Indices kept(const Simplification& s) { return s.kept_indices; }

Indices all_indices(std::size_t n) {
  Indices v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Squared error of the piecewise-linear curve through (idx, y[idx]) with the
// outer segments extended, plus alpha per segment. Written independently of
// reconstruct().
double brute_objective(const std::vector<double>& y, const Indices& idx, double alpha) {
  double err = 0.0;
  for (std::size_t t = 0; t < y.size(); ++t) {
    std::size_t s = 0;
    while (s + 2 < idx.size() && idx[s + 1] < t) ++s;
    const double x0 = double(idx[s]), x1 = double(idx[s + 1]);
    const double y0 = y[idx[s]], y1 = y[idx[s + 1]];
    const double fit = y0 + (y1 - y0) * (double(t) - x0) / (x1 - x0);
    err += (y[t] - fit) * (y[t] - fit);
  }
  return err + alpha * double(idx.size() - 1);
}

double exhaustive_min(const std::vector<double>& y, double alpha) {
  const std::size_t n = y.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    Indices idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    best = std::min(best, brute_objective(y, idx, alpha));
  }
  return best;
}

}  // namespace

TEST_CASE("rdp") {
  const TimeSeries line({0, 1, 2, 3, 4});
  CHECK(kept(rdp(line, 0.5)) == Indices{0, 4});
  CHECK(kept(rdp(TimeSeries({0, 0, 1, 0, 0}), 0.5)) == Indices{0, 2, 4});
  const TimeSeries zig({0, 1, -1, 2, -2, 3});
  CHECK(kept(rdp(zig, 0.0)) == all_indices(6));
  CHECK_THROWS_AS(rdp(line, -1.0), Error);
}

TEST_CASE("rdp splits at the farthest point of each span") {
  // apex at 3 first, then index 2 (distance sqrt(2)) splits the left half
  const TimeSeries ts({0, 0.8, 0, 3, 0, 0, 0});
  CHECK(kept(rdp(ts, 0.5)) == Indices{0, 1, 2, 3, 4, 6});
  CHECK(kept(rdp(ts, 1.0)) == Indices{0, 2, 3, 4, 6});
}

TEST_CASE("visvalingam-whyatt") {
  CHECK(kept(vw(TimeSeries({0, 1, 2, 3}), 0.0)) == Indices{0, 3});
  CHECK(kept(vw(TimeSeries({0, 1, 0}), 0.9)) == Indices{0, 1, 2});
  CHECK(kept(vw(TimeSeries({0, 1, 0}), 1.0)) == Indices{0, 2});
  CHECK(kept(vw(TimeSeries({0, 1, -1, 2, -2}), 0.0)) == all_indices(5));
}

TEST_CASE("bottom-up") {
  CHECK(kept(bottom_up(TimeSeries({3, 3, 3, 3, 3}), 0.1)) == Indices{0, 4});
  CHECK(kept(bottom_up(TimeSeries({0, 1, -1, 2, -2}), 0.0)) == all_indices(5));
  // merges removing 1 or 3 cost 2.5; removing 2 costs 5; only error <= 1 may happen
  CHECK(kept(bottom_up(TimeSeries({0, 0, 5, 0, 0}), 1.0)) == all_indices(5));
  CHECK(kept(bottom_up(TimeSeries({0, 0, 5, 0, 0}), 2.5)).size() < 5);
  // flat neighbours merge for free into [0,2], [3,4], [5,6]; joining any of
  // those pays at least 2.5
  CHECK(kept(bottom_up(TimeSeries({0, 0, 0, 5, 0, 0, 0}), 1.0)) == Indices{0, 2, 3, 4, 5, 6});
}

TEST_CASE("optimal simplification extremes") {
  Rng rng(5);
  const auto ts = testing::random_series(rng, 12);
  const auto identity = optimal_simplify(ts, 0.0);
  CHECK(kept(identity) == all_indices(12));
  CHECK(os_objective(ts, identity, 0.0) == 0.0);

  double total = 0.0;
  for (double v : ts.values()) total += v * v * 100.0;
  CHECK(optimal_simplify(ts, total).segment_count() == 1);
}

TEST_CASE("optimal simplification matches exhaustive search") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + rng.below(6);
    const auto y = testing::random_values(rng, n);
    for (double alpha : {0.0, 0.1, 1.0, 10.0}) {
      const auto s = optimal_simplify(TimeSeries(y), alpha);
      const double got = brute_objective(y, s.kept_indices, alpha);
      CHECK(std::abs(got - exhaustive_min(y, alpha)) <= 1e-9);
      CHECK(std::abs(os_objective(TimeSeries(y), s, alpha) - got) <= 1e-9);
    }
  }
}

TEST_CASE("reconstruct") {
  auto s = make_simplification(TimeSeries({0, 9, 9, 9, 4}), {0, 4});
  CHECK(reconstruct(s).vec() == std::vector<double>{0, 1, 2, 3, 4});

  s = make_simplification(TimeSeries({7, 1, 7, 3, 7}), {1, 3});
  CHECK(reconstruct(s).vec() == std::vector<double>{0, 1, 2, 3, 4});

  Rng rng(1);
  const auto ts = testing::random_series(rng, 20);
  CHECK(reconstruct(make_simplification(ts, all_indices(20))) == ts);

  CHECK_THROWS_AS(make_simplification(ts, {3}), ConfigError);
  CHECK_THROWS_AS(make_simplification(ts, {3, 3}), ConfigError);
  CHECK_THROWS_AS(make_simplification(ts, {3, 20}), ConfigError);
}

TEST_CASE("normalized parameter endpoints") {
  Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const auto ts = testing::random_series(rng, 40);
    for (auto alg : kAllAlgorithms) {
      CAPTURE(algorithm_name(alg));
      CHECK(normalize_param(alg, ts, 1.0) == 0.0);
      CHECK(normalize_param(alg, ts, 0.0) == doctest::Approx(prepare(alg, ts)->saturation()));
      CHECK(simplify(alg, ts, 0.0).segment_count() == 1);
      const auto full = simplify(alg, ts, 1.0);
      CHECK(kept(full) == all_indices(40));
      CHECK(reconstruct(full) == ts);
      CHECK(complexity_of(simplify(alg, ts, 0.0)) == doctest::Approx(2.0 / 40.0));
    }
  }
}

TEST_CASE("prepared series agrees with one-shot runs") {
  Rng rng(8);
  const auto ts = testing::random_series(rng, 60);
  for (auto alg : kAllAlgorithms) {
    const auto prepared = prepare(alg, ts);
    for (double raw : {0.0, 0.05, 0.3, 1.0, 3.0}) {
      Simplification direct;
      switch (alg) {
        case AlgorithmId::kRdp: direct = rdp(ts, raw); break;
        case AlgorithmId::kVw: direct = vw(ts, raw); break;
        case AlgorithmId::kBu: direct = bottom_up(ts, raw); break;
        case AlgorithmId::kOs: direct = optimal_simplify(ts, raw); break;
      }
      CAPTURE(algorithm_name(alg));
      CAPTURE(raw);
      CHECK(prepared->at_raw(raw).kept_indices == direct.kept_indices);
    }
  }
}

TEST_CASE("segment count grows with alpha_c") {
  Rng rng(99);
  const auto grid = alpha_grid();
  for (int trial = 0; trial < 10; ++trial) {
    const auto ts = testing::random_walk(rng, 64);
    for (auto alg : kAllAlgorithms) {
      const auto prepared = prepare(alg, ts);
      std::size_t last = 0;
      for (double a : grid) {
        const auto segs = prepared->at(a).segment_count();
        CHECK(segs >= last);
        last = segs;
      }
    }
  }
}

TEST_CASE("algorithm names and json") {
  CHECK(parse_algorithm("RDP") == AlgorithmId::kRdp);
  CHECK(parse_algorithm("bu") == AlgorithmId::kBu);
  CHECK_FALSE(parse_algorithm("dp").has_value());
  const auto s = make_simplification(TimeSeries({0, 1, 2}), {0, 2});
  const auto json = simplification_json(s, AlgorithmId::kVw, 0.25);
  CHECK(json.find("\"kept_indices\":[0,2]") != std::string::npos);
  CHECK(json.find("\"algorithm\":\"vw\"") != std::string::npos);
}
