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
#include <fstream>

#include "tss/error.hpp"
#include "tss/evaluation.hpp"
#include "tss/prototypes.hpp"

namespace tss {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << body;
}

// Polyline vertices of the simplification as index,value rows.
std::string point_list_csv(const Simplification& s) {
  std::string out = "index,value\n";
  for (std::size_t i = 0; i < s.kept_indices.size(); ++i) {
    out += std::to_string(s.kept_indices[i]) + ',' + format_number(s.kept_values[i]) + '\n';
  }
  return out;
}

std::string class_list(const Dataset& d) {
  std::string out;
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    if (c > 0) out += ',';
    out += std::to_string(d.classes[c]);
  }
  return out;
}

std::string prompt_text(const Dataset& d, const PrototypeSet& protos, std::span<const std::string> proto_files,
                        std::span<const std::string> test_files, std::size_t batch) {
  const std::string classes = class_list(d);
  const std::string k = std::to_string(protos.k_per_class);
  std::string p;
  p += "You are a time-series classification expert. Your goal is to learn from a small set of labeled examples "
       "(classes " + classes + ") and then assign the correct class to a new, unlabeled time series. "
       "Follow these steps:\n";
  p += "1. Carefully examine the " + k + " examples of classes " + classes + " and identify their common patterns.\n";
  p += "2. Compare the new instance to your learned characteristics of classes " + classes + ".\n";
  p += "3. Provide a brief rationale for your decision.\n";
  p += "4. Conclude with one line stating only the predicted class for each one of the unlabeled examples.\n";
  p += "5. Only use the pattern (Predicted class: " + classes +
       ") for each one of the unlabeled examples exclusively in the final guess.\n";
  p += "Remember that I will always provide you with " + std::to_string(batch) +
       " unlabeled examples. Therefore, you need to perform exactly " + std::to_string(batch) +
       " predictions. The examples:\n\n";

  std::size_t f = 0;
  for (const auto& cp : protos.classes) {
    p += "Class " + std::to_string(cp.label) + " examples (" + std::to_string(cp.instance_ids.size()) +
         " time-series labeled " + std::to_string(cp.label) + "):\n";
    for (std::size_t i = 0; i < cp.instance_ids.size(); ++i) p += "  " + proto_files[f++] + "\n";
    p += "\n";
  }
  p += "New instances to classify (unlabeled time-series):\n";
  for (const auto& t : test_files) p += "  " + t + "\n";
  return p;
}

}  // namespace

BundleManifest export_prompt_bundle(const Dataset& d, const PrototypeSet& protos, const Classifier& clf,
                                    const BundleOptions& opts, const fs::path& out) {
  if (d.num_classes() != 2) {
    throw ConfigError(d.name + " has " + std::to_string(d.num_classes()) + " classes; bundles need a binary dataset");
  }
  if (opts.batch == 0) throw ConfigError("batch size must be at least 1");
  if (d.test.size() < opts.test_count) {
    throw ConfigError(d.name + " test split has " + std::to_string(d.test.size()) + " instances, fewer than " +
                      std::to_string(opts.test_count));
  }
  std::error_code ec;
  fs::create_directories(out / "prototypes", ec);
  if (ec) throw IoError("cannot create " + (out / "prototypes").string() + ": " + ec.message());

  std::vector<std::string> proto_files;
  for (const auto& cp : protos.classes) {
    for (std::size_t i = 0; i < cp.instance_ids.size(); ++i) {
      const auto s = simplify(opts.algorithm, cp.series[i], opts.alpha_c);
      const std::string name =
          "prototypes/class" + std::to_string(cp.label) + "_train" + std::to_string(cp.instance_ids[i]) + ".csv";
      write_file(out / name, point_list_csv(s));
      proto_files.push_back("../" + name);
    }
  }

  const auto pool = stratified_sample(d.test, opts.test_count, opts.seed, Split::kTest);
  BundleManifest manifest;
  std::string key = "test_id,batch,label\n";
  std::string all_prompts;
  const std::size_t batches = (pool.instances.size() + opts.batch - 1) / opts.batch;
  for (std::size_t b = 0; b < batches; ++b) {
    char dir_name[32];
    std::snprintf(dir_name, sizeof dir_name, "batch_%02zu", b + 1);
    const fs::path dir = out / dir_name;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
    manifest.batch_dirs.push_back(dir);

    std::vector<std::string> test_files;
    const std::size_t end = std::min(pool.instances.size(), (b + 1) * opts.batch);
    for (std::size_t i = b * opts.batch; i < end; ++i) {
      const auto& inst = pool.instances[i];
      const auto s = simplify(opts.algorithm, inst.series, opts.alpha_c);
      const std::string name = "test" + std::to_string(inst.id) + ".csv";
      write_file(dir / name, point_list_csv(s));
      test_files.push_back(name);

      const SeriesKey original{d.name, inst.id, "original"};
      const int label = clf.predict(inst.series.values(), &original);
      manifest.test_ids.push_back(inst.id);
      manifest.answers.push_back(label);
      key += std::to_string(inst.id) + ',' + std::to_string(b + 1) + ',' + std::to_string(label) + '\n';
    }
    const std::string prompt = prompt_text(d, protos, proto_files, test_files, test_files.size());
    write_file(dir / "prompt.txt", prompt);
    all_prompts += "=== " + std::string(dir_name) + " ===\n" + prompt + "\n";
  }
  write_file(out / "prompt.txt", all_prompts);
  write_file(out / "answer_key.csv", key);
  return manifest;
}

}  // namespace tss
