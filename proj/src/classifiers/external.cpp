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

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tss/classifiers.hpp"
#include "tss/error.hpp"

namespace tss {

std::string SeriesKey::str() const { return dataset + "," + std::to_string(instance_id) + "," + variant; }

std::string variant_name(AlgorithmId alg, double alpha_c) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", alpha_c);
  return "alg=" + std::string(algorithm_name(alg)) + ";ac=" + buf;
}

namespace {

template <typename T>
bool parse_int(std::string_view s, T& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && s[i] == ' ') ++i;
  return s.substr(i);
}

}  // namespace

std::unique_ptr<ExternalPredictions> ExternalPredictions::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || trim(line) != "dataset,instance_id,variant,label") {
    throw ParseError(path.string() + ":1: expected header dataset,instance_id,variant,label");
  }

  std::map<SeriesKey, int> table;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(line_no);
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(trim(f));
    if (fields.size() != 4) throw ParseError(where + ": expected 4 fields");

    SeriesKey key;
    key.dataset = fields[0];
    key.variant = fields[2];
    int label = 0;
    if (!parse_int(fields[1], key.instance_id)) throw ParseError(where + ": bad instance_id '" + fields[1] + "'");
    if (!parse_int(fields[3], label) || label < 0) throw ParseError(where + ": bad label '" + fields[3] + "'");

    auto [it, inserted] = table.emplace(key, label);
    if (!inserted && it->second != label) {
      throw ParseError(where + ": conflicting label for " + key.str());
    }
  }
  return std::make_unique<ExternalPredictions>(std::move(table));
}

int ExternalPredictions::predict(std::span<const double>, const SeriesKey* key) const {
  if (key == nullptr) throw LookupError("external predictions need a series key");
  const auto it = table_.find(*key);
  if (it == table_.end()) throw LookupError("no external prediction for " + key->str());
  return it->second;
}

std::unique_ptr<Classifier> load_external_predictions(const std::filesystem::path& path) {
  return ExternalPredictions::load(path);
}

std::unique_ptr<Classifier> make_classifier(const std::string& spec, std::span<const LabeledInstance> train,
                                            std::uint64_t /*seed*/) {
  // None of the built-in classifiers train stochastically.
  if (spec == "logreg") return fit_logreg(train);
  if (spec == "knn" || spec == "knn:dtw") return fit_knn(train, 5, Metric::kDtw);
  if (spec == "knn:euclidean") return fit_knn(train, 5, Metric::kEuclidean);
  if (spec.rfind("external:", 0) == 0) return load_external_predictions(spec.substr(9));
  throw ConfigError("unknown classifier '" + spec + "' (expected logreg, knn[:dtw|:euclidean] or external:<path>)");
}

}  // namespace tss
