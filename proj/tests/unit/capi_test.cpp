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

// Exercises the shared library through tss.h only.
#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "testing.hpp"
#include "tss/tss.h"

using tss::testing::TempDir;

TEST_CASE("c api status reporting") {
  CHECK(std::string(tss_status_string(TSS_OK)) == "ok");
  tss_dataset* d = nullptr;
  CHECK(tss_dataset_load("/definitely/not/here", "X", &d) == TSS_ERR_IO);
  CHECK(d == nullptr);
  CHECK(std::string(tss_last_error()).find("/definitely/not/here") != std::string::npos);
  CHECK(tss_dataset_load(nullptr, "X", &d) == TSS_ERR_INVALID_ARGUMENT);

  tss_algorithm alg;
  CHECK(tss_algorithm_parse("vw", &alg) == TSS_OK);
  CHECK(alg == TSS_VW);
  CHECK(tss_algorithm_parse("zz", &alg) == TSS_ERR_INVALID_ARGUMENT);
  CHECK(std::string(tss_algorithm_name(TSS_OS)) == "os");
}

TEST_CASE("c api simplification") {
  const std::vector<double> y{0, 0, 1, 0, 0};
  tss_simplification* s = nullptr;
  REQUIRE(tss_simplify_raw(TSS_RDP, y.data(), y.size(), 0.5, &s) == TSS_OK);
  CHECK(tss_simplification_kept_count(s) == 3);
  CHECK(tss_simplification_segment_count(s) == 2);
  const size_t* idx = nullptr;
  const double* vals = nullptr;
  REQUIRE(tss_simplification_kept(s, &idx, &vals) == TSS_OK);
  CHECK(idx[1] == 2);
  CHECK(vals[1] == 1.0);
  std::vector<double> back(5);
  CHECK(tss_simplification_reconstruct(s, back.data(), back.size()) == TSS_OK);
  CHECK(back == std::vector<double>{0, 0.5, 1, 0.5, 0});
  CHECK(tss_simplification_reconstruct(s, back.data(), 4) == TSS_ERR_INVALID_ARGUMENT);
  char* json = nullptr;
  REQUIRE(tss_simplification_json(s, &json) == TSS_OK);
  CHECK(std::string(json).find("\"kept_indices\":[0,2,4]") != std::string::npos);
  tss_string_free(json);
  tss_simplification_free(s);

  CHECK(tss_simplify(TSS_OS, y.data(), y.size(), 1.5, &s) == TSS_ERR_INVALID_ARGUMENT);
  CHECK(tss_simplify(TSS_OS, y.data(), 1, 0.5, &s) == TSS_ERR_FORMAT);
  REQUIRE(tss_simplify(TSS_OS, y.data(), y.size(), 0.0, &s) == TSS_OK);
  CHECK(tss_simplification_segment_count(s) == 1);
  tss_simplification_free(s);

  double raw = -1.0;
  CHECK(tss_normalize_param(TSS_VW, y.data(), y.size(), 1.0, &raw) == TSS_OK);
  CHECK(raw == 0.0);
}

TEST_CASE("c api kappa and dtw") {
  const int64_t m[] = {40, 10, 10, 40};
  double k = 0.0;
  CHECK(tss_cohen_kappa(m, 2, &k) == TSS_OK);
  CHECK(k == 0.6);
  const double a[] = {0, 0}, b[] = {1, 1};
  double d = 0.0;
  CHECK(tss_dtw_distance(a, 2, b, 2, &d) == TSS_OK);
  CHECK(d == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("c api dataset, classifier and sweep") {
  TempDir dir("capi");
  tss::testing::write_pulse_dataset(dir.path(), "Pulse", 32, 20, 30, 9);
  tss_dataset* d = nullptr;
  REQUIRE(tss_dataset_load(dir.path().c_str(), "Pulse", &d) == TSS_OK);
  CHECK(tss_dataset_series_length(d) == 32);
  CHECK(tss_dataset_num_classes(d) == 2);
  CHECK(tss_dataset_split_size(d, TSS_SPLIT_TRAIN) == 20);
  const double* values = nullptr;
  size_t len = 0;
  int label = -1;
  REQUIRE(tss_dataset_instance(d, TSS_SPLIT_TEST, 0, &values, &len, &label) == TSS_OK);
  CHECK(len == 32);
  CHECK(tss_dataset_instance(d, TSS_SPLIT_TEST, 30, &values, &len, &label) == TSS_ERR_INVALID_ARGUMENT);

  tss_classifier* c = nullptr;
  CHECK(tss_classifier_create(d, "tree", 42, &c) == TSS_ERR_CONFIG);
  REQUIRE(tss_classifier_create(d, "logreg", 42, &c) == TSS_OK);
  int predicted = -1;
  CHECK(tss_classifier_predict(c, values, len, nullptr, 0, nullptr, &predicted) == TSS_OK);
  CHECK((predicted == 0 || predicted == 1));

  tss_curve* curve = nullptr;
  REQUIRE(tss_sweep(d, TSS_BU, c, TSS_SPLIT_TEST, 20, 42, 2, &curve) == TSS_OK);
  CHECK(tss_curve_size(curve) == 101);
  tss_curve_point p;
  REQUIRE(tss_curve_point_at(curve, 100, &p) == TSS_OK);
  CHECK(p.loyalty == 1.0);
  CHECK(tss_curve_point_at(curve, 101, &p) == TSS_ERR_INVALID_ARGUMENT);
  const double auc = tss_curve_auc(curve);
  CHECK((auc >= 0.0 && auc <= 100.0));
  double alpha = -1.0;
  CHECK(tss_curve_min_alpha_for_loyalty(curve, 1.0, &alpha) == TSS_OK);
  CHECK(alpha <= 1.0);
  char* csv = nullptr;
  REQUIRE(tss_curve_csv(curve, &csv) == TSS_OK);
  CHECK(std::strncmp(csv, "alpha_c,", 8) == 0);
  tss_string_free(csv);
  tss_curve_free(curve);

  char* json = nullptr;
  REQUIRE(tss_prototypes(d, 1, "dtw", 42, 1, &json) == TSS_OK);
  CHECK(std::string(json).find("\"classes\"") != std::string::npos);
  tss_string_free(json);
  CHECK(tss_prototypes(d, 50, "dtw", 42, 1, &json) == TSS_ERR_CONFIG);

  tss_bundle_options bo;
  tss_bundle_options_init(&bo);
  bo.test_count = 20;
  bo.k_per_class = 2;
  const auto out = dir.path() / "bundle";
  CHECK(tss_export_bundle(d, c, &bo, out.c_str()) == TSS_OK);
  CHECK(std::filesystem::exists(out / "answer_key.csv"));

  tss_classifier_free(c);
  tss_dataset_free(d);
}

TEST_CASE("c api evaluate and characterize") {
  TempDir dir("capi");
  tss::testing::write_pulse_dataset(dir.path() / "data", "Pulse", 24, 10, 20, 3);
  const auto data = (dir.path() / "data").string();
  const auto out = (dir.path() / "out").string();
  tss_evaluate_options o;
  tss_evaluate_options_init(&o);
  o.data_dir = data.c_str();
  o.out_dir = out.c_str();
  o.algorithms = "rdp,os";
  o.classifier = "knn:euclidean";
  REQUIRE(tss_run_evaluate(&o) == TSS_OK);
  CHECK(std::filesystem::exists(dir.path() / "out" / "curve_Pulse_rdp_knn-euclidean.csv"));
  CHECK_FALSE(std::filesystem::exists(dir.path() / "out" / "curve_Pulse_vw_knn-euclidean.csv"));
  o.algorithms = "rdp,zz";
  CHECK(tss_run_evaluate(&o) == TSS_ERR_INVALID_ARGUMENT);

  char* names = nullptr;
  REQUIRE(tss_select_datasets(data.c_str(), "all", 0, &names) == TSS_OK);
  CHECK(std::string(names) == "Pulse\n");
  tss_string_free(names);

  char* csv = nullptr;
  REQUIRE(tss_run_characterize(data.c_str(), "Pulse", 0, 1, &csv) == TSS_OK);
  CHECK(std::string(csv).find("\nPulse,") != std::string::npos);
  tss_string_free(csv);
}
