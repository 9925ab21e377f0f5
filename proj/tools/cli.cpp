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

// Command-line front end. Everything goes through the C API in tss.h.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tss/tss.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct Common {
  std::string data_dir;
  std::string dataset;
  std::size_t max_len = 200;
  std::uint64_t seed = 42;
  std::size_t jobs = 1;
};

class Failure {
 public:
  Failure(int code, std::string message) : code_(code), message_(std::move(message)) {}
  int code() const { return code_; }
  const std::string& message() const { return message_; }

 private:
  int code_;
  std::string message_;
};

void check(tss_status status) {
  if (status == TSS_OK) return;
  const int code = status == TSS_ERR_INVALID_ARGUMENT ? kExitUsage : kExitData;
  throw Failure(code, std::string(tss_status_string(status)) + ": " + tss_last_error());
}

// Owns a malloc'd string returned by the library.
std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  tss_string_free(s);
  return out;
}

std::string resolve_data_dir(const Common& c) {
  if (!c.data_dir.empty()) return c.data_dir;
  if (const char* env = std::getenv("TSS_DATA_DIR"); env != nullptr && *env != '\0') return env;
  throw Failure(kExitUsage, "no data directory: pass --data-dir or set TSS_DATA_DIR");
}

std::string require_existing_dir(const Common& c) {
  auto dir = resolve_data_dir(c);
  if (!std::filesystem::is_directory(dir)) throw Failure(kExitData, "data directory not found: " + dir);
  return dir;
}

struct Dataset {
  tss_dataset* handle = nullptr;
  Dataset(const std::string& dir, const std::string& name) { check(tss_dataset_load(dir.c_str(), name.c_str(), &handle)); }
  ~Dataset() { tss_dataset_free(handle); }
  Dataset(const Dataset&) = delete;
  Dataset& operator=(const Dataset&) = delete;
};

struct Classifier {
  tss_classifier* handle = nullptr;
  Classifier(const Dataset& d, const std::string& spec, std::uint64_t seed) {
    check(tss_classifier_create(d.handle, spec.c_str(), seed, &handle));
  }
  ~Classifier() { tss_classifier_free(handle); }
  Classifier(const Classifier&) = delete;
  Classifier& operator=(const Classifier&) = delete;
};

tss_algorithm parse_algorithm(const std::string& name) {
  tss_algorithm alg;
  if (tss_algorithm_parse(name.c_str(), &alg) != TSS_OK) throw Failure(kExitUsage, "unknown algorithm '" + name + "'");
  return alg;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw Failure(kExitData, "cannot write " + path.string());
}

void add_common(CLI::App* app, Common& c, bool needs_dataset) {
  app->add_option("--data-dir", c.data_dir, "directory with <Name>_TRAIN.tsv / <Name>_TEST.tsv (default $TSS_DATA_DIR)");
  auto* ds = app->add_option("--dataset", c.dataset, needs_dataset ? "dataset name" : "dataset name or 'all'");
  if (needs_dataset) ds->required();
  app->add_option("--max-len", c.max_len, "only datasets with series shorter than this")->capture_default_str();
  app->add_option("--seed", c.seed, "random seed")->capture_default_str();
  app->add_option("--jobs", c.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"time series simplification and classifier loyalty toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tss_version());

  Common common;

  auto* characterize = app.add_subcommand("characterize", "stationarity, seasonality and entropy per dataset");
  add_common(characterize, common, false);
  std::string out;
  characterize->add_option("--out", out, "CSV file to write (default stdout)");

  auto* evaluate = app.add_subcommand("evaluate", "loyalty/complexity curves and summary tables");
  add_common(evaluate, common, false);
  std::string algorithm = "all";
  std::string classifier = "logreg";
  std::size_t sample_size = 100;
  std::string split = "test";
  bool verbose = false;
  evaluate->add_option("--algorithm", algorithm, "rdp|vw|bu|os|all or a comma list")->capture_default_str();
  evaluate->add_option("--classifier", classifier, "logreg|knn|knn:euclidean|external:<path>")->capture_default_str();
  evaluate->add_option("--sample-size", sample_size, "instances per dataset")->capture_default_str();
  evaluate->add_option("--split", split, "split to sample from")->check(CLI::IsMember({"train", "test"}))->capture_default_str();
  evaluate->add_option("--out", out, "output directory")->required();
  evaluate->add_flag("-v,--verbose", verbose, "progress on stderr");

  auto* simplify = app.add_subcommand("simplify", "simplify one instance and print JSON");
  add_common(simplify, common, true);
  std::size_t instance = 0;
  double alpha_c = 0.2;
  std::string simplify_algorithm = "rdp";
  simplify->add_option("--instance", instance, "instance index within the split")->required();
  simplify->add_option("--algorithm", simplify_algorithm, "rdp|vw|bu|os")->capture_default_str();
  simplify->add_option("--alpha-c", alpha_c, "normalized simplification strength")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  simplify->add_option("--split", split, "train|test")->check(CLI::IsMember({"train", "test"}))->capture_default_str();

  auto* prototypes = app.add_subcommand("prototypes", "k-medoid prototypes per class");
  add_common(prototypes, common, true);
  std::size_t k = 4;
  std::string metric = "dtw";
  prototypes->add_option("--k", k, "prototypes per class")->capture_default_str()->check(CLI::PositiveNumber);
  prototypes->add_option("--metric", metric, "dtw|euclidean")->check(CLI::IsMember({"dtw", "euclidean"}))->capture_default_str();
  prototypes->add_option("--out", out, "JSON file to write (default stdout)");

  auto* bundle = app.add_subcommand("export-bundle", "write a prompt bundle for language-model classification");
  add_common(bundle, common, true);
  std::string bundle_algorithm = "os";
  std::size_t tests = 50;
  std::size_t batch = 10;
  bundle->add_option("--algorithm", bundle_algorithm, "rdp|vw|bu|os")->capture_default_str();
  bundle->add_option("--alpha-c", alpha_c, "normalized simplification strength")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  bundle->add_option("--tests", tests, "test instances")->capture_default_str()->check(CLI::PositiveNumber);
  bundle->add_option("--batch", batch, "tests per prompt")->capture_default_str()->check(CLI::PositiveNumber);
  bundle->add_option("--k", k, "prototypes per class")->capture_default_str()->check(CLI::PositiveNumber);
  bundle->add_option("--metric", metric, "dtw|euclidean")->check(CLI::IsMember({"dtw", "euclidean"}))->capture_default_str();
  bundle->add_option("--classifier", classifier, "classifier for the answer key")->capture_default_str();
  bundle->add_option("--out", out, "output directory")->required();

  auto* serve = app.add_subcommand("serve", "HTTP JSON API");
  add_common(serve, common, false);
  int port = 8787;
  std::string host = "127.0.0.1";
  std::string static_dir;
  serve->add_option("--port", port, "TCP port (0 picks one)")->capture_default_str()->check(CLI::Range(0, 65535));
  serve->add_option("--host", host, "bind address")->capture_default_str();
  serve->add_option("--static-dir", static_dir, "files served under /");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (common.dataset.empty()) common.dataset = "all";
    const auto split_id = split == "train" ? TSS_SPLIT_TRAIN : TSS_SPLIT_TEST;

    if (characterize->parsed()) {
      const auto dir = require_existing_dir(common);
      char* csv = nullptr;
      check(tss_run_characterize(dir.c_str(), common.dataset.c_str(), common.max_len, common.jobs, &csv));
      const auto text = take(csv);
      if (out.empty()) {
        std::cout << text;
      } else {
        write_file(out, text);
      }
    } else if (evaluate->parsed()) {
      const auto dir = require_existing_dir(common);
      tss_evaluate_options o;
      tss_evaluate_options_init(&o);
      o.data_dir = dir.c_str();
      o.dataset = common.dataset.c_str();
      o.max_length = common.max_len;
      o.algorithms = algorithm.c_str();
      o.classifier = classifier.c_str();
      o.seed = common.seed;
      o.sample_size = sample_size;
      o.split = split_id;
      o.out_dir = out.c_str();
      o.jobs = common.jobs;
      o.verbose = verbose ? 1 : 0;
      check(tss_run_evaluate(&o));
    } else if (simplify->parsed()) {
      const auto dir = require_existing_dir(common);
      const auto alg = parse_algorithm(simplify_algorithm);
      Dataset d(dir, common.dataset);
      const double* values = nullptr;
      std::size_t length = 0;
      if (instance >= tss_dataset_split_size(d.handle, split_id)) {
        throw Failure(kExitData, common.dataset + " " + split + " split has no instance " + std::to_string(instance));
      }
      check(tss_dataset_instance(d.handle, split_id, instance, &values, &length, nullptr));
      tss_simplification* s = nullptr;
      check(tss_simplify(alg, values, length, alpha_c, &s));
      char* json = nullptr;
      const auto status = tss_simplification_json(s, &json);
      tss_simplification_free(s);
      check(status);
      std::cout << take(json) << '\n';
    } else if (prototypes->parsed()) {
      const auto dir = require_existing_dir(common);
      Dataset d(dir, common.dataset);
      char* json = nullptr;
      check(tss_prototypes(d.handle, k, metric.c_str(), common.seed, common.jobs, &json));
      const auto text = take(json) + "\n";
      if (out.empty()) {
        std::cout << text;
      } else {
        write_file(out, text);
      }
    } else if (bundle->parsed()) {
      const auto dir = require_existing_dir(common);
      const auto alg = parse_algorithm(bundle_algorithm);
      Dataset d(dir, common.dataset);
      Classifier c(d, classifier, common.seed);
      tss_bundle_options o;
      tss_bundle_options_init(&o);
      o.algorithm = alg;
      o.alpha_c = alpha_c;
      o.test_count = tests;
      o.batch = batch;
      o.k_per_class = k;
      o.metric = metric.c_str();
      o.seed = common.seed;
      o.jobs = common.jobs;
      check(tss_export_bundle(d.handle, c.handle, &o, out.c_str()));
    } else if (serve->parsed()) {
      const auto dir = require_existing_dir(common);
      check(tss_serve(dir.c_str(), host.c_str(), port, common.jobs, static_dir.empty() ? nullptr : static_dir.c_str()));
    }
  } catch (const Failure& f) {
    std::cerr << "tss: " << f.message() << '\n';
    return f.code();
  } catch (const std::exception& e) {
    std::cerr << "tss: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
