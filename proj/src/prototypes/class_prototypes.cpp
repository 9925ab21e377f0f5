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

#include <map>

#include "json.hpp"
#include "tss/error.hpp"
#include "tss/prototypes.hpp"

namespace tss {

PrototypeSet class_prototypes(const Dataset& d, std::size_t k_per_class, Metric metric, std::uint64_t seed,
                              std::size_t jobs) {
  if (k_per_class == 0) throw ConfigError("k per class must be at least 1");
  std::map<int, std::vector<const LabeledInstance*>> by_class;
  for (int c : d.classes) by_class[c];
  for (const auto& inst : d.train) by_class[inst.label].push_back(&inst);

  PrototypeSet set;
  set.k_per_class = k_per_class;
  set.metric = metric;
  for (const auto& [label, members] : by_class) {
    if (members.size() < k_per_class) {
      throw ConfigError("class " + d.raw_labels.at(static_cast<std::size_t>(label)) + " of " + d.name + " has " +
                        std::to_string(members.size()) + " training instances, fewer than k = " +
                        std::to_string(k_per_class));
    }
    std::vector<TimeSeries> items;
    items.reserve(members.size());
    for (const auto* m : members) items.push_back(m->series);
    const auto res = kmedoids(items, k_per_class, metric, seed, jobs);

    ClassPrototypes cp;
    cp.label = label;
    for (std::size_t idx : res.medoids) {
      cp.instance_ids.push_back(members[idx]->id);
      cp.series.push_back(members[idx]->series);
    }
    set.classes.push_back(std::move(cp));
  }
  return set;
}

std::string prototypes_json(const Dataset& d, const PrototypeSet& protos) {
  nlohmann::ordered_json j;
  j["dataset"] = d.name;
  j["k"] = protos.k_per_class;
  j["metric"] = metric_name(protos.metric);
  j["split"] = "train";
  auto& classes = j["classes"] = nlohmann::ordered_json::array();
  for (const auto& cp : protos.classes) {
    nlohmann::ordered_json c;
    c["label"] = cp.label;
    c["raw_label"] = d.raw_labels.at(static_cast<std::size_t>(cp.label));
    c["instance_ids"] = cp.instance_ids;
    classes.push_back(std::move(c));
  }
  return j.dump();
}

}  // namespace tss
