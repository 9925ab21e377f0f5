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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tss/classifiers.hpp"
#include "tss/simplify.hpp"
#include "tss/timeseries.hpp"

namespace tss {

/// Symmetric distance matrix stored densely.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) {
    d_[i * n_ + j] = v;
    d_[j * n_ + i] = v;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> d_;
};

DistanceMatrix pairwise_distances(std::span<const TimeSeries> items, Metric metric, std::size_t jobs = 1);

/// Sum over items of the distance to their nearest medoid.
double medoid_cost(const DistanceMatrix& d, std::span<const std::size_t> medoids);

struct KMedoidsResult {
  std::vector<std::size_t> medoids;   // indices into the input, ascending
  double cost = 0.0;
  std::vector<double> cost_history;   // after initialisation, then after each swap
};

/// PAM: greedy build (total-distance minimiser, then farthest points) and
/// best-improvement swaps until none lowers the cost. The seed only orders
/// exact ties; items are processed in a canonical order so the result does
/// not depend on input order.
KMedoidsResult kmedoids(const DistanceMatrix& d, std::size_t k, std::uint64_t seed = 42);
KMedoidsResult kmedoids(std::span<const TimeSeries> items, std::size_t k, Metric metric, std::uint64_t seed = 42,
                        std::size_t jobs = 1);

struct ClassPrototypes {
  int label = 0;
  std::vector<std::size_t> instance_ids;  // ids within the train split
  std::vector<TimeSeries> series;
};

struct PrototypeSet {
  std::vector<ClassPrototypes> classes;
  std::size_t k_per_class = 0;
  Metric metric = Metric::kDtw;
};

inline constexpr std::size_t kDefaultPrototypesPerClass = 4;

PrototypeSet class_prototypes(const Dataset& d, std::size_t k_per_class, Metric metric, std::uint64_t seed = 42,
                              std::size_t jobs = 1);

std::string prototypes_json(const Dataset& d, const PrototypeSet& protos);

struct BundleOptions {
  AlgorithmId algorithm = AlgorithmId::kOs;
  double alpha_c = 0.2;
  std::size_t test_count = 50;
  std::size_t batch = 10;
  std::uint64_t seed = 42;
};

/// Summary of what export_prompt_bundle wrote.
struct BundleManifest {
  std::vector<std::filesystem::path> batch_dirs;
  std::vector<std::size_t> test_ids;
  std::vector<int> answers;  // classifier label on the original, per test id
};

/// Writes simplified prototypes, simplified test batches, a prompt per batch
/// and answer_key.csv under `out`.
BundleManifest export_prompt_bundle(const Dataset& d, const PrototypeSet& protos, const Classifier& clf,
                                    const BundleOptions& opts, const std::filesystem::path& out);

}  // namespace tss
