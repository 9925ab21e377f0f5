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

#include "tss/pipeline.hpp"

#include <fstream>

#include "tss/characterization.hpp"
#include "tss/classifiers.hpp"
#include "tss/error.hpp"

namespace tss {

namespace fs = std::filesystem;

void write_text_file(const fs::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << body;
  if (!out) throw IoError("failed writing " + path.string());
}

std::vector<std::string> select_datasets(const fs::path& data_dir, const std::string& selector,
                                         std::size_t max_length) {
  if (!fs::is_directory(data_dir)) throw IoError("data directory not found: " + data_dir.string());
  if (selector != "all") {
    if (!fs::exists(data_dir / (selector + "_TRAIN.tsv")) || !fs::exists(data_dir / (selector + "_TEST.tsv"))) {
      throw IoError("dataset " + selector + " not found in " + data_dir.string());
    }
    return {selector};
  }
  std::vector<std::string> out;
  for (const auto& name : list_datasets(data_dir)) {
    const auto rows = read_ucr_rows(data_dir / (name + "_TRAIN.tsv"));
    if (rows.front().values.size() < max_length) out.push_back(name);
  }
  return out;
}

std::vector<fs::path> run_evaluate(const EvaluateConfig& cfg) {
  if (cfg.out.empty()) throw ConfigError("evaluate needs an output directory");
  if (cfg.algorithms.empty()) throw ConfigError("evaluate needs at least one algorithm");
  const auto names = select_datasets(cfg.data_dir, cfg.dataset, cfg.max_length);
  if (names.empty()) throw IoError("no datasets selected in " + cfg.data_dir.string());
  std::error_code ec;
  fs::create_directories(cfg.out, ec);
  if (ec) throw IoError("cannot create " + cfg.out.string() + ": " + ec.message());

  std::vector<fs::path> written;
  std::vector<DatasetResult> results;
  for (const auto& name : names) {
    if (cfg.log) cfg.log("evaluating " + name);
    const Dataset d = load_dataset(cfg.data_dir, name);
    const auto clf = make_classifier(cfg.classifier, d.train, cfg.seed);
    const auto pool = stratified_sample(d.split(cfg.split), cfg.sample_size, cfg.seed, cfg.split);

    DatasetResult r;
    r.dataset = name;
    r.series_length = d.series_length;
    r.num_classes = d.num_classes();
    r.characteristics = characterize_dataset(d, cfg.jobs);
    for (AlgorithmId alg : cfg.algorithms) {
      SweepOptions opts;
      opts.jobs = cfg.jobs;
      auto curve = sweep(name, d.num_classes(), alg, *clf, pool, opts);
      const fs::path path = cfg.out / curve_file_name(curve);
      write_text_file(path, curve_csv(curve));
      written.push_back(path);
      if (cfg.log) cfg.log("  " + std::string(algorithm_name(alg)) + " auc " + format_number(auc(curve)));
      r.curves.push_back(std::move(curve));
    }
    results.push_back(std::move(r));
  }

  const Report rep = aggregate(results);
  for (const auto& [file, body] : {std::pair{"summary.csv", &rep.summary}, std::pair{"table1.csv", &rep.table1},
                                   std::pair{"table3.csv", &rep.table3}, std::pair{"table5.csv", &rep.table5}}) {
    write_text_file(cfg.out / file, *body);
    written.push_back(cfg.out / file);
  }
  return written;
}

std::string run_characterize(const fs::path& data_dir, const std::string& selector, std::size_t max_length,
                             std::size_t jobs) {
  std::string csv = characteristics_csv_header() + "\n";
  for (const auto& name : select_datasets(data_dir, selector, max_length)) {
    const Dataset d = load_dataset(data_dir, name);
    csv += characteristics_csv_row(name, characterize_dataset(d, jobs)) + "\n";
  }
  return csv;
}

}  // namespace tss
