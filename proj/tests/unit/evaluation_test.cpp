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
#include <sstream>

#include "doctest.h"
#include "testing.hpp"
#include "tss/classifiers.hpp"
#include "tss/error.hpp"
#include "tss/evaluation.hpp"

using namespace tss;

namespace {

double kappa_oracle(const std::vector<std::vector<double>>& m) {
  const std::size_t k = m.size();
  double n = 0.0, agree = 0.0;
  std::vector<double> rows(k, 0.0), cols(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      n += m[i][j];
      rows[i] += m[i][j];
      cols[j] += m[i][j];
    }
    agree += m[i][i];
  }
  double pe = 0.0;
  for (std::size_t i = 0; i < k; ++i) pe += (rows[i] / n) * (cols[i] / n);
  const double po = agree / n;
  return pe == 1.0 ? 1.0 : (po - pe) / (1.0 - pe);
}

EvaluationCurve curve_of(const std::vector<std::array<double, 3>>& rows) {
  EvaluationCurve c;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CurvePoint p;
    p.alpha_c = double(i) / double(rows.size() - 1);
    p.mean_complexity = rows[i][0];
    p.loyalty = rows[i][1];
    p.kappa = rows[i][2];
    c.points.push_back(p);
  }
  return c;
}

SamplePool pool_of(std::vector<LabeledInstance> xs) {
  SamplePool p;
  p.instances = std::move(xs);
  return p;
}

}  // namespace

TEST_CASE("cohen kappa") {
  CHECK(cohen_kappa(ConfusionCounts(2, {40, 10, 10, 40})) == 0.6);
  CHECK(cohen_kappa(ConfusionCounts(2, {25, 25, 25, 25})) == 0.0);
  CHECK(cohen_kappa(ConfusionCounts(3, {5, 0, 0, 0, 7, 0, 0, 0, 2})) == 1.0);
  CHECK(cohen_kappa(ConfusionCounts(2, {9, 0, 0, 0})) == 1.0);
  Rng rng(10);
  for (int t = 0; t < 200; ++t) {
    const std::size_t k = 2 + rng.below(5);
    std::vector<std::int64_t> flat(k * k);
    std::vector<std::vector<double>> m(k, std::vector<double>(k));
    for (std::size_t i = 0; i < k * k; ++i) {
      flat[i] = std::int64_t(rng.below(40));
      m[i / k][i % k] = double(flat[i]);
    }
    flat[0] += 1;
    m[0][0] += 1;
    CHECK(std::abs(cohen_kappa(ConfusionCounts(k, flat)) - kappa_oracle(m)) <= 1e-12);
  }
}

TEST_CASE("complexity") {
  const TimeSeries ts(std::vector<double>(24, 1.0));
  std::vector<std::size_t> idx(24);
  for (std::size_t i = 0; i < 24; ++i) idx[i] = i;
  CHECK(complexity_of(make_simplification(ts, idx)) == 1.0);
  CHECK(complexity_of(make_simplification(ts, {0, 23})) == doctest::Approx(2.0 / 24.0));
  const auto five = make_simplification(ts, {0, 5, 11, 17, 23});
  CHECK(complexity_of(five) == doctest::Approx(5.0 / 24.0));
  CHECK(five.segment_count() == 4);
}

TEST_CASE("alpha grid") {
  const auto g = alpha_grid();
  REQUIRE(g.size() == kGridSteps);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 1.0);
  CHECK(g[37] == 0.37);
}

TEST_CASE("auc") {
  CHECK(auc({{0.1, 0.0}, {0.5, 1.0}, {1.0, 1.0}}) == doctest::Approx(100.0 * 0.7 / 0.9));
  CHECK(auc({{0.2, 1.0}, {0.6, 1.0}, {1.0, 1.0}}) == doctest::Approx(100.0));
  CHECK(auc({{0.1, -0.5}, {0.5, 0.0}, {1.0, 1.0}}) == doctest::Approx(100.0 * 0.25 / 0.9));
  // duplicate complexities are averaged before integrating
  CHECK(auc({{0.5, 0.0}, {0.5, 1.0}, {1.0, 1.0}}) == doctest::Approx(75.0));
  CHECK(auc(std::vector<std::pair<double, double>>{{1.0, 0.4}}) == doctest::Approx(40.0));
  std::vector<std::pair<double, double>> dense;
  for (int i = 1; i <= 1000; ++i) dense.emplace_back(i / 1000.0, i == 1000 ? 1.0 : -0.2);
  CHECK(auc(dense) < 0.1);
}

TEST_CASE("loyalty lookups") {
  const auto c = curve_of({{0.1, 0.7, 0.0}, {0.3, 0.9, 0.5}, {1.0, 1.0, 1.0}});
  CHECK(complexity_at_loyalty(c, 0.85) == 0.3);
  CHECK(complexity_at_loyalty(c, 1.0) == 1.0);
  CHECK(min_alpha_for_loyalty(c, 0.85) == 0.5);
  CHECK(min_alpha_for_loyalty(c, 1e-9) == 0.0);
  CHECK(min_alpha_for_loyalty(c, 1.0) == 1.0);
}

TEST_CASE("sweep endpoints and determinism") {
  Rng rng(21);
  const auto train = testing::pulse_instances(rng, 30, 48, 0.2);
  const auto test = testing::pulse_instances(rng, 20, 48, 0.2);
  const auto clf = fit_knn(train, 5, Metric::kEuclidean);
  const auto pool = pool_of(test);
  for (auto alg : kAllAlgorithms) {
    const auto one = sweep("pulse", 2, alg, *clf, pool, {.jobs = 1});
    const auto many = sweep("pulse", 2, alg, *clf, pool, {.jobs = 8});
    REQUIRE(one.points.size() == kGridSteps);
    const auto& first = one.points.front();
    const auto& last = one.points.back();
    CHECK(first.mean_segments == 1.0);
    CHECK(first.mean_complexity == doctest::Approx(2.0 / 48.0));
    CHECK(last.loyalty == 1.0);
    CHECK(last.kappa == 1.0);
    CHECK(last.mean_complexity == 1.0);
    CHECK(curve_csv(one) == curve_csv(many));
    for (std::size_t i = 1; i < one.points.size(); ++i) {
      CHECK(one.points[i].mean_segments >= one.points[i - 1].mean_segments);
    }
    const std::size_t idx = min_alpha_index_for_loyalty(one, 0.9);
    CHECK(one.points[idx].loyalty >= 0.9);
    for (std::size_t i = 0; i < idx; ++i) CHECK(one.points[i].loyalty < 0.9);
  }
}

TEST_CASE("sweep propagates external lookup misses") {
  Rng rng(2);
  const auto test = testing::pulse_instances(rng, 4, 16, 0.1);
  ExternalPredictions ext({});
  CHECK_THROWS_AS(sweep("pulse", 2, AlgorithmId::kRdp, ext, pool_of(test)), LookupError);
}

TEST_CASE("curve csv layout") {
  EvaluationCurve c = curve_of({{0.25, 0.5, 0.1}, {1.0, 1.0, 1.0}});
  c.dataset = "D";
  c.algorithm = AlgorithmId::kVw;
  c.classifier = "knn";
  CHECK(curve_file_name(c) == "curve_D_vw_knn.csv");
  std::istringstream in(curve_csv(c));
  std::string line;
  std::getline(in, line);
  CHECK(line == "alpha_c,mean_complexity,loyalty,kappa,mean_segments");
  std::getline(in, line);
  CHECK(line.rfind("0.00,0.25,0.5,0.1,", 0) == 0);
}

TEST_CASE("aggregate groups") {
  auto make = [](const std::string& name, std::size_t classes, double kappa_low) {
    DatasetResult r;
    r.dataset = name;
    r.num_classes = classes;
    r.series_length = 10;
    r.characteristics.stationarity = Stationarity::kStationary;
    EvaluationCurve c = curve_of({{0.2, 1.0, kappa_low}, {1.0, 1.0, 1.0}});
    c.algorithm = AlgorithmId::kRdp;
    c.classifier = "knn";
    r.curves.push_back(c);
    return r;
  };
  // AUCs: (0 + 1)/2 * 100 = 50 and 100
  const auto rep = aggregate({make("A", 2, 0.0), make("B", 2, 1.0)});
  CHECK(rep.table1.find("\nall,2,75.0000\n") != std::string::npos);
  CHECK(rep.table1.find("\nbinary,2,75.0000\n") != std::string::npos);
  CHECK(rep.table1.find("\nmulticlass,0,NA\n") != std::string::npos);
  CHECK(rep.table3.find("0.80,0.2000") != std::string::npos);

  const auto single = aggregate({make("A", 2, 0.0)});
  CHECK(single.table1.find("\nall,1,50.0000\n") != std::string::npos);
  CHECK(single.summary.find("A,rdp,knn,0,50.0000") != std::string::npos);
}
