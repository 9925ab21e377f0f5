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

#include <cstdio>
#include <functional>
#include <map>

#include "tss/evaluation.hpp"

namespace tss {

namespace {

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string target_label(double t) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.2f", t);
  return buf;
}

constexpr const char* kEmpty = "NA";

const char* kAucNote =
    "# auc: trapezoidal area under max(kappa,0) versus mean complexity, from the smallest complexity to 1, "
    "scaled to 0-100\n";

// Algorithms present in the results, in report column order.
std::vector<AlgorithmId> algorithms_in(const std::vector<DatasetResult>& results) {
  std::vector<AlgorithmId> out;
  for (AlgorithmId a : kAllAlgorithms) {
    for (const auto& r : results) {
      bool has = false;
      for (const auto& c : r.curves) has = has || c.algorithm == a;
      if (has) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

const EvaluationCurve* find_curve(const DatasetResult& r, AlgorithmId a) {
  for (const auto& c : r.curves) {
    if (c.algorithm == a) return &c;
  }
  return nullptr;
}

}  // namespace

Report aggregate(const std::vector<DatasetResult>& results) {
  Report rep;
  const auto algs = algorithms_in(results);

  rep.summary = kAucNote;
  rep.summary += "dataset,algorithm,classifier,seed,auc";
  for (double t : kLoyaltyTargets) rep.summary += ",complexity_at_" + target_label(t);
  for (double t : kLoyaltyTargets) rep.summary += ",alpha_c_at_" + target_label(t);
  rep.summary += '\n';
  for (const auto& r : results) {
    for (const auto& c : r.curves) {
      rep.summary += r.dataset + ',' + std::string(algorithm_name(c.algorithm)) + ',' + c.classifier + ',' +
                     std::to_string(c.seed) + ',' + fixed(auc(c));
      for (double t : kLoyaltyTargets) rep.summary += ',' + fixed(complexity_at_loyalty(c, t));
      for (double t : kLoyaltyTargets) rep.summary += ',' + target_label(min_alpha_for_loyalty(c, t));
      rep.summary += '\n';
    }
  }

  // Grouped mean AUC.
  using Pred = std::function<bool(const DatasetResult&)>;
  const std::vector<std::pair<std::string, Pred>> groups = {
      {"all", [](const DatasetResult&) { return true; }},
      {"binary", [](const DatasetResult& r) { return r.num_classes == 2; }},
      {"multiclass", [](const DatasetResult& r) { return r.num_classes > 2; }},
      {"stationary", [](const DatasetResult& r) { return r.characteristics.stationarity == Stationarity::kStationary; }},
      {"non_stationary",
       [](const DatasetResult& r) { return r.characteristics.stationarity == Stationarity::kNonStationary; }},
      {"partially_stationary",
       [](const DatasetResult& r) { return r.characteristics.stationarity == Stationarity::kPartiallyStationary; }},
      {"seasonal", [](const DatasetResult& r) { return r.characteristics.seasonal; }},
      {"non_seasonal", [](const DatasetResult& r) { return !r.characteristics.seasonal; }},
      {"entropy_low", [](const DatasetResult& r) { return r.characteristics.entropy == EntropyBin::kLow; }},
      {"entropy_medium", [](const DatasetResult& r) { return r.characteristics.entropy == EntropyBin::kMedium; }},
      {"entropy_high", [](const DatasetResult& r) { return r.characteristics.entropy == EntropyBin::kHigh; }},
  };
  rep.table1 = kAucNote;
  rep.table1 += "group,datasets";
  for (AlgorithmId a : algs) rep.table1 += ',' + std::string(algorithm_name(a));
  rep.table1 += '\n';
  for (const auto& [label, pred] : groups) {
    std::size_t members = 0;
    for (const auto& r : results) members += pred(r) ? 1 : 0;
    rep.table1 += label + ',' + std::to_string(members);
    for (AlgorithmId a : algs) {
      double sum = 0.0;
      std::size_t count = 0;
      for (const auto& r : results) {
        const auto* c = pred(r) ? find_curve(r, a) : nullptr;
        if (c != nullptr) {
          sum += auc(*c);
          ++count;
        }
      }
      rep.table1 += ',' + (count == 0 ? std::string(kEmpty) : fixed(sum / static_cast<double>(count)));
    }
    rep.table1 += '\n';
  }

  // Mean complexity at fixed loyalty.
  rep.table3 = "loyalty";
  for (AlgorithmId a : algs) rep.table3 += ',' + std::string(algorithm_name(a));
  rep.table3 += '\n';
  for (double t : kLoyaltyTargets) {
    rep.table3 += target_label(t);
    for (AlgorithmId a : algs) {
      double sum = 0.0;
      std::size_t count = 0;
      for (const auto& r : results) {
        if (const auto* c = find_curve(r, a)) {
          sum += complexity_at_loyalty(*c, t);
          ++count;
        }
      }
      rep.table3 += ',' + (count == 0 ? std::string(kEmpty) : fixed(sum / static_cast<double>(count)));
    }
    rep.table3 += '\n';
  }

  // Per-dataset mean segment counts at the smallest alpha_c meeting each target.
  rep.table5 = "dataset,classes,length,stationarity,seasonal,entropy";
  for (AlgorithmId a : algs) {
    for (double t : kLoyaltyTargets) rep.table5 += ',' + std::string(algorithm_name(a)) + "_segments_" + target_label(t);
  }
  rep.table5 += '\n';
  for (const auto& r : results) {
    const auto& ch = r.characteristics;
    rep.table5 += r.dataset + ',' + std::to_string(r.num_classes) + ',' + std::to_string(r.series_length) + ',' +
                  std::string(stationarity_name(ch.stationarity)) + ',' + (ch.seasonal ? "true" : "false") + ',' +
                  std::string(entropy_bin_name(ch.entropy));
    for (AlgorithmId a : algs) {
      const auto* c = find_curve(r, a);
      for (double t : kLoyaltyTargets) {
        rep.table5 += ',';
        rep.table5 += c == nullptr ? std::string(kEmpty)
                                   : fixed(c->points[min_alpha_index_for_loyalty(*c, t)].mean_segments);
      }
    }
    rep.table5 += '\n';
  }
  return rep;
}

}  // namespace tss
