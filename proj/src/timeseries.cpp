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

#include "tss/timeseries.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "tss/error.hpp"
#include "tss/rng.hpp"

namespace tss {

namespace fs = std::filesystem;

TimeSeries::TimeSeries(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw FormatError("time series needs at least 2 observations");
  for (double v : values_) {
    if (!std::isfinite(v)) throw FormatError("time series contains a non-finite value");
  }
}

const char* split_name(Split split) { return split == Split::kTrain ? "train" : "test"; }

namespace {

bool parse_double(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

// Class ids by ascending numeric raw label.
std::map<double, int> label_map(std::span<const RawRow> rows) {
  std::map<double, int> ids;
  for (const auto& row : rows) ids.emplace(row.label_value, 0);
  int next = 0;
  for (auto& [value, id] : ids) id = next++;
  return ids;
}

}  // namespace

std::vector<RawRow> read_ucr_rows(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());

  std::vector<RawRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_whitespace(line);
    if (tokens.empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (tokens.size() < 3) throw FormatError(where + ": expected a label and at least 2 values");

    RawRow row;
    row.label_token = std::string(tokens[0]);
    if (!parse_double(tokens[0], row.label_value)) {
      throw ParseError(where + ": non-numeric label '" + row.label_token + "'");
    }
    row.values.reserve(tokens.size() - 1);
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      double v = 0.0;
      if (!parse_double(tokens[t], v) || !std::isfinite(v)) {
        throw ParseError(where + ": non-numeric value '" + std::string(tokens[t]) + "'");
      }
      row.values.push_back(v);
    }
    if (!rows.empty() && rows.front().values.size() != row.values.size()) {
      throw FormatError(where + ": ragged row of length " + std::to_string(row.values.size()) + ", expected " +
                        std::to_string(rows.front().values.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw FormatError(path.string() + ": empty file");
  return rows;
}

std::vector<LabeledInstance> parse_ucr_tsv(const fs::path& path) {
  auto rows = read_ucr_rows(path);
  const auto ids = label_map(rows);
  std::vector<LabeledInstance> out;
  out.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.push_back({i, TimeSeries(std::move(rows[i].values)), ids.at(rows[i].label_value)});
  }
  return out;
}

void write_ucr_tsv(const fs::path& path, std::span<const LabeledInstance> instances,
                   std::span<const std::string> raw_labels) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  char buf[64];
  for (const auto& inst : instances) {
    if (raw_labels.empty()) {
      out << inst.label;
    } else {
      out << raw_labels[static_cast<std::size_t>(inst.label)];
    }
    for (double v : inst.series.values()) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
      out << '\t' << std::string_view(buf, static_cast<std::size_t>(ptr - buf));
    }
    out << '\n';
  }
}

Dataset load_dataset(const fs::path& dir, const std::string& name, bool normalize) {
  if (!fs::is_directory(dir)) throw IoError("data directory not found: " + dir.string());
  const fs::path train_path = dir / (name + "_TRAIN.tsv");
  const fs::path test_path = dir / (name + "_TEST.tsv");
  if (!fs::exists(train_path)) throw IoError("missing " + train_path.string());
  if (!fs::exists(test_path)) throw IoError("missing " + test_path.string());

  auto train_rows = read_ucr_rows(train_path);
  auto test_rows = read_ucr_rows(test_path);
  if (train_rows.front().values.size() != test_rows.front().values.size()) {
    throw FormatError(name + ": train and test series lengths differ");
  }

  std::vector<RawRow> all;
  all.insert(all.end(), train_rows.begin(), train_rows.end());
  all.insert(all.end(), test_rows.begin(), test_rows.end());
  const auto ids = label_map(all);

  Dataset d;
  d.name = name;
  d.series_length = train_rows.front().values.size();
  d.raw_labels.resize(ids.size());
  for (const auto& row : all) d.raw_labels[static_cast<std::size_t>(ids.at(row.label_value))] = row.label_token;
  d.classes.resize(ids.size());
  std::iota(d.classes.begin(), d.classes.end(), 0);

  auto convert = [&](std::vector<RawRow>& rows, std::vector<LabeledInstance>& out) {
    out.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      TimeSeries ts(std::move(rows[i].values));
      if (normalize) ts = znormalize(ts);
      out.push_back({i, std::move(ts), ids.at(rows[i].label_value)});
    }
  };
  convert(train_rows, d.train);
  convert(test_rows, d.test);
  return d;
}

std::vector<std::string> list_datasets(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError("data directory not found: " + dir.string());
  std::vector<std::string> names;
  const std::string suffix = "_TRAIN.tsv";
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string file = entry.path().filename().string();
    if (file.size() <= suffix.size() || file.compare(file.size() - suffix.size(), suffix.size(), suffix) != 0) {
      continue;
    }
    std::string name = file.substr(0, file.size() - suffix.size());
    if (fs::exists(dir / (name + "_TEST.tsv"))) names.push_back(std::move(name));
  }
  std::sort(names.begin(), names.end());
  return names;
}

TimeSeries znormalize(const TimeSeries& ts) {
  const auto v = ts.values();
  const double n = static_cast<double>(v.size());
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / n);

  std::vector<double> out(v.size(), 0.0);
  if (sd > 0.0) {
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] - mean) / sd;
  }
  return TimeSeries(std::move(out));
}

SamplePool stratified_sample(std::span<const LabeledInstance> split, std::size_t size, std::uint64_t seed,
                             Split source) {
  SamplePool pool;
  pool.source_split = source;
  pool.seed = seed;
  if (split.size() <= size) {
    pool.instances.assign(split.begin(), split.end());
    return pool;
  }

  std::map<int, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < split.size(); ++i) members[split[i].label].push_back(i);

  // Floor quotas, then hand out the remainder to the largest classes first.
  struct Quota {
    int label;
    std::size_t available;
    std::size_t take;
  };
  std::vector<Quota> quotas;
  std::size_t assigned = 0;
  for (const auto& [label, idx] : members) {
    const std::size_t take = size * idx.size() / split.size();
    quotas.push_back({label, idx.size(), take});
    assigned += take;
  }
  std::vector<std::size_t> order(quotas.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return quotas[a].available > quotas[b].available; });
  while (assigned < size) {
    for (std::size_t o : order) {
      if (assigned == size) break;
      if (quotas[o].take < quotas[o].available) {
        ++quotas[o].take;
        ++assigned;
      }
    }
  }

  Rng rng(seed);
  std::vector<std::size_t> chosen;
  for (const auto& q : quotas) {
    auto idx = members[q.label];
    rng.shuffle(std::span<std::size_t>(idx));
    chosen.insert(chosen.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(q.take));
  }
  std::sort(chosen.begin(), chosen.end());
  for (std::size_t i : chosen) pool.instances.push_back(split[i]);
  return pool;
}

}  // namespace tss
