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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
#include <sys/wait.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "testing.hpp"
#include "tss/characterization.hpp"
#include "tss/classifiers.hpp"
#include "tss/evaluation.hpp"
#include "tss/pipeline.hpp"
#include "tss/prototypes.hpp"
#include "tss/simplify.hpp"

using namespace tss;
using Clock = std::chrono::steady_clock;

namespace {

// Tolerances and limits.
constexpr double kOsTol = 1e-9;
constexpr double kOsSeconds = 30.0;
constexpr double kReconstructTol = 1e-12;
constexpr double kKappaTol = 1e-12;
constexpr double kAcfTol = 1e-9;
constexpr double kApenTol = 1e-9;
constexpr int kAdfMinAgree = 38;
constexpr double kE2eAccuracy = 0.95;
constexpr double kE2eLoyalty = 0.95;
constexpr double kE2eComplexity = 0.25;
constexpr double kE2eSeconds = 120.0;
constexpr double kFastMillis = 100.0;
constexpr double kOsLongSeconds = 10.0;
constexpr double kMedoidTol = 1e-9;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(const std::string& name, const std::function<Outcome()>& check) {
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name << "  (" << o.detail << ")" << std::endl;
  if (!o.pass) ++failures;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// --- independent oracles -----------------------------------------------------

double os_brute_objective(const std::vector<double>& y, const std::vector<std::size_t>& idx, double alpha) {
  double err = 0.0;
  std::size_t s = 0;
  for (std::size_t t = 0; t < y.size(); ++t) {
    while (s + 2 < idx.size() && idx[s + 1] < t) ++s;
    const double x0 = double(idx[s]), x1 = double(idx[s + 1]);
    const double fit = y[idx[s]] + (y[idx[s + 1]] - y[idx[s]]) * (double(t) - x0) / (x1 - x0);
    err += (y[t] - fit) * (y[t] - fit);
  }
  return err + alpha * double(idx.size() - 1);
}

double os_exhaustive(const std::vector<double>& y, double alpha) {
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1u << y.size()); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    best = std::min(best, os_brute_objective(y, idx, alpha));
  }
  return best;
}

double kappa_formula(const std::vector<std::vector<double>>& m) {
  const std::size_t k = m.size();
  double n = 0.0, diag = 0.0, pe = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    diag += m[i][i];
    for (std::size_t j = 0; j < k; ++j) n += m[i][j];
  }
  for (std::size_t i = 0; i < k; ++i) {
    double row = 0.0, col = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      row += m[i][j];
      col += m[j][i];
    }
    pe += row * col / (n * n);
  }
  const double po = diag / n;
  return pe == 1.0 ? 1.0 : (po - pe) / (1.0 - pe);
}

std::vector<double> acf_direct(const std::vector<double>& y) {
  const std::size_t n = y.size();
  double mean = 0.0;
  for (double v : y) mean += v;
  mean /= double(n);
  std::vector<double> c(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t t = 0; t + k < n; ++t) c[k] += (y[t] - mean) * (y[t + k] - mean);
  }
  for (std::size_t k = n; k-- > 0;) c[k] /= c[0];
  return c;
}

double medoid1_exhaustive(const DistanceMatrix& d) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t m = 0; m < d.size(); ++m) {
    double total = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) total += d(i, m);
    best = std::min(best, total);
  }
  return best;
}

int run_command(const std::string& cmd) {
  const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// --- criteria ----------------------------------------------------------------

Outcome os_optimality() {
  Rng rng(20240601);
  const auto t0 = Clock::now();
  double worst = 0.0;
  int cases = 0;
  for (int s = 0; s < 200; ++s) {
    const std::size_t n = 4 + rng.below(7);
    const auto y = testing::random_values(rng, n);
    for (double alpha : {0.0, 0.1, 1.0, 10.0}) {
      const auto simp = optimal_simplify(TimeSeries(y), alpha);
      worst = std::max(worst, std::abs(os_brute_objective(y, simp.kept_indices, alpha) - os_exhaustive(y, alpha)));
      ++cases;
    }
  }
  const double secs = seconds_since(t0);
  return {worst <= kOsTol && secs < kOsSeconds,
          std::to_string(cases) + " cases, max |dp - exhaustive| " + fmt("%.3g", worst) + ", " + fmt("%.2f", secs) +
              " s"};
}

Outcome monotonicity() {
  Rng rng(64);
  const auto grid = alpha_grid();
  int violations = 0;
  for (int s = 0; s < 50; ++s) {
    const auto ts = testing::random_series(rng, 64);
    for (auto alg : kAllAlgorithms) {
      const auto p = prepare(alg, ts);
      std::size_t last = 0;
      for (double a : grid) {
        const auto segs = p->at(a).segment_count();
        if (segs < last) ++violations;
        last = segs;
      }
    }
  }
  return {violations == 0, std::to_string(violations) + " violations over 50 series x 4 algorithms x 101 steps"};
}

Outcome endpoints() {
  Rng rng(7);
  double worst_dev = 0.0;
  bool one_segment = true, complexity_ok = true;
  for (int s = 0; s < 20; ++s) {
    const std::size_t n = 8 + rng.below(120);
    const auto ts = testing::random_series(rng, n);
    for (auto alg : kAllAlgorithms) {
      const auto full = reconstruct(simplify(alg, ts, 1.0));
      for (std::size_t i = 0; i < n; ++i) worst_dev = std::max(worst_dev, std::abs(full[i] - ts[i]));
      const auto zero = simplify(alg, ts, 0.0);
      one_segment &= zero.segment_count() == 1;
      complexity_ok &= complexity_of(zero) == 2.0 / double(n);
    }
  }
  Rng data(11);
  const auto train = testing::pulse_instances(data, 30, 40, 0.1);
  SamplePool pool;
  pool.instances = testing::pulse_instances(data, 30, 40, 0.1);
  const auto clf = fit_logreg(train);
  bool sweep_ok = true;
  for (auto alg : kAllAlgorithms) {
    const auto c = sweep("pulse", 2, alg, *clf, pool);
    sweep_ok &= c.points.back().loyalty == 1.0 && c.points.back().kappa == 1.0;
    sweep_ok &= c.points.front().mean_segments == 1.0 && c.points.front().mean_complexity == 2.0 / 40.0;
  }
  return {worst_dev < kReconstructTol && one_segment && complexity_ok && sweep_ok,
          "max deviation at alpha_c=1 " + fmt("%.3g", worst_dev) + ", one segment at 0: " +
              (one_segment ? "yes" : "no") + ", complexity 2/n: " + (complexity_ok ? "yes" : "no") +
              ", sweep endpoints: " + (sweep_ok ? "yes" : "no")};
}

Outcome kappa_oracle() {
  Rng rng(1000);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t k = 2 + rng.below(5);
    std::vector<std::int64_t> flat(k * k);
    std::vector<std::vector<double>> m(k, std::vector<double>(k));
    for (std::size_t i = 0; i < k * k; ++i) {
      flat[i] = std::int64_t(rng.below(60));
      m[i / k][i % k] = double(flat[i]);
    }
    flat[0] += 1;
    m[0][0] += 1.0;
    worst = std::max(worst, std::abs(cohen_kappa(ConfusionCounts(k, flat)) - kappa_formula(m)));
  }
  const double fixed = cohen_kappa(ConfusionCounts(2, {40, 10, 10, 40}));
  return {worst <= kKappaTol && fixed == 0.6,
          "max diff " + fmt("%.3g", worst) + ", [[40,10],[10,40]] -> " + format_number(fixed)};
}

Outcome acf_and_entropy() {
  Rng rng(512);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto y = testing::random_values(rng, 4 + rng.below(509));
    const auto fast = acf(y).values;
    const auto slow = acf_direct(y);
    for (std::size_t k = 0; k < y.size(); ++k) worst = std::max(worst, std::abs(fast[k] - slow[k]));
  }
  const double constant = approx_entropy(std::vector<double>(50, 3.0));
  double shift = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto y = testing::random_values(rng, 60);
    std::vector<double> moved(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) moved[i] = 4.0 * y[i] + 10.0;
    shift = std::max(shift, std::abs(approx_entropy(y) - approx_entropy(moved)));
  }
  return {worst <= kAcfTol && constant == 0.0 && shift <= kApenTol,
          "max acf diff " + fmt("%.3g", worst) + ", ApEn(constant) " + fmt("%g", constant) +
              ", ApEn shift/scale diff " + fmt("%.3g", shift)};
}

Outcome adf_reference() {
  std::ifstream f(std::string(TSS_TEST_DATA_DIR) + "/adf_reference.csv");
  if (!f) return {false, "reference file missing"};
  std::string line;
  std::getline(f, line);
  int rows = 0, agree = 0;
  while (std::getline(f, line)) {
    std::stringstream ss(line);
    std::vector<std::string> cells;
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    std::vector<double> y;
    for (std::size_t i = 5; i < cells.size(); ++i) y.push_back(std::stod(cells[i]));
    ++rows;
    agree += adf_test(y).stationary == (cells[2] == "1");
  }
  return {rows == 40 && agree >= kAdfMinAgree, std::to_string(agree) + "/" + std::to_string(rows) + " labels agree"};
}

Outcome end_to_end() {
  testing::TempDir dir("accept_e2e");
  testing::write_pulse_dataset(dir.path() / "data", "Pulse", 128, 60, 100, 42, 0.1);
  const auto t0 = Clock::now();
  const auto d = load_dataset(dir.path() / "data", "Pulse");
  const auto clf = fit_logreg(d.train);
  std::size_t correct = 0;
  for (const auto& x : d.test) correct += clf->predict(x.series.values()) == x.label;
  const double accuracy = double(correct) / double(d.test.size());

  EvaluateConfig cfg;
  cfg.data_dir = dir.path() / "data";
  cfg.dataset = "Pulse";
  cfg.classifier = "logreg";
  cfg.out = dir.path() / "out";
  cfg.jobs = 1;
  run_evaluate(cfg);
  const double secs = seconds_since(t0);

  const auto pool = stratified_sample(d.test, kDefaultSampleSize, kDefaultSeed);
  double rdp_c = 1.0, os_c = 1.0;
  for (auto [alg, slot] : {std::pair{AlgorithmId::kRdp, &rdp_c}, std::pair{AlgorithmId::kOs, &os_c}}) {
    *slot = complexity_at_loyalty(sweep("Pulse", 2, alg, *clf, pool), kE2eLoyalty);
  }
  return {accuracy >= kE2eAccuracy && rdp_c <= kE2eComplexity && os_c <= kE2eComplexity && secs < kE2eSeconds,
          "logreg accuracy " + fmt("%.3f", accuracy) + ", complexity at loyalty 0.95: rdp " + fmt("%.4f", rdp_c) +
              ", os " + fmt("%.4f", os_c) + ", evaluate run " + fmt("%.1f", secs) + " s"};
}

Outcome determinism() {
  testing::TempDir dir("accept_det");
  testing::write_pulse_dataset(dir.path() / "data", "Pulse", 64, 30, 60, 5, 0.2);
  testing::write_pulse_dataset(dir.path() / "data", "Other", 40, 20, 40, 6, 0.3);
  const std::string base = std::string(TSS_CLI_PATH) + " evaluate --data-dir " + (dir.path() / "data").string() +
                           " --dataset all --algorithm all --classifier knn --seed 42";
  if (run_command(base + " --jobs 1 --out " + (dir.path() / "one").string()) != 0 ||
      run_command(base + " --jobs 8 --out " + (dir.path() / "eight").string()) != 0) {
    return {false, "evaluate failed"};
  }
  std::size_t files = 0, same = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir.path() / "one")) {
    ++files;
    const auto other = dir.path() / "eight" / e.path().filename();
    same += std::filesystem::exists(other) && testing::read_file(e.path()) == testing::read_file(other);
  }
  return {files == 12 && same == files, std::to_string(same) + "/" + std::to_string(files) + " CSVs identical"};
}

Outcome performance() {
  Rng rng(10000);
  const auto big = testing::random_walk(rng, 10000);
  std::string detail;
  bool ok = true;
  for (auto alg : {AlgorithmId::kRdp, AlgorithmId::kVw, AlgorithmId::kBu}) {
    double best = std::numeric_limits<double>::infinity();
    for (int rep = 0; rep < 3; ++rep) {
      const auto t0 = Clock::now();
      const auto s = simplify(alg, big, 0.5);
      best = std::min(best, seconds_since(t0) * 1000.0);
      if (s.segment_count() == 0) ok = false;
    }
    ok &= best < kFastMillis;
    detail += std::string(algorithm_name(alg)) + " " + fmt("%.1f", best) + " ms, ";
  }
  const auto mid = testing::random_walk(rng, 500);
  const auto t0 = Clock::now();
  simplify(AlgorithmId::kOs, mid, 0.5);
  const double os_secs = seconds_since(t0);
  ok &= os_secs < kOsLongSeconds;
  return {ok, detail + "os(n=500) " + fmt("%.2f", os_secs) + " s"};
}

Outcome kmedoids_check() {
  Rng rng(30);
  double worst = 0.0;
  bool monotone = true;
  for (int t = 0; t < 50; ++t) {
    std::vector<TimeSeries> items;
    const std::size_t count = 2 + rng.below(29);
    for (std::size_t i = 0; i < count; ++i) items.push_back(testing::random_series(rng, 16));
    const auto d = pairwise_distances(items, Metric::kDtw);
    const auto one = kmedoids(d, 1);
    worst = std::max(worst, std::abs(one.cost - medoid1_exhaustive(d)));
    const auto many = kmedoids(d, std::min<std::size_t>(count, 4), 42);
    for (std::size_t i = 1; i < many.cost_history.size(); ++i) {
      monotone &= many.cost_history[i] <= many.cost_history[i - 1];
    }
  }
  return {worst <= kMedoidTol && monotone,
          "max |pam - exhaustive| " + fmt("%.3g", worst) + ", swap costs non-increasing: " + (monotone ? "yes" : "no")};
}

}  // namespace

int main() {
  report("os-optimality", os_optimality);
  report("monotonicity", monotonicity);
  report("endpoints", endpoints);
  report("kappa-oracle", kappa_oracle);
  report("acf-and-entropy", acf_and_entropy);
  report("adf-reference", adf_reference);
  report("end-to-end", end_to_end);
  report("determinism", determinism);
  report("performance", performance);
  report("kmedoids", kmedoids_check);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
