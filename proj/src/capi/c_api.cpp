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

#include "tss/tss.h"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "tss/classifiers.hpp"
#include "tss/error.hpp"
#include "tss/evaluation.hpp"
#include "tss/pipeline.hpp"
#include "tss/prototypes.hpp"
#include "tss/server.hpp"
#include "tss/simplify.hpp"
#include "tss/timeseries.hpp"

struct tss_dataset {
  tss::Dataset value;
};
struct tss_simplification {
  tss::Simplification value;
  tss::AlgorithmId algorithm;
  double alpha_c;
};
struct tss_classifier {
  std::unique_ptr<tss::Classifier> value;
};
struct tss_curve {
  tss::EvaluationCurve value;
};

namespace {

thread_local std::string last_error;

tss_status fail(tss_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
tss_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const tss::ParseError& e) {
    return fail(TSS_ERR_PARSE, e.what());
  } catch (const tss::FormatError& e) {
    return fail(TSS_ERR_FORMAT, e.what());
  } catch (const tss::ConfigError& e) {
    return fail(TSS_ERR_CONFIG, e.what());
  } catch (const tss::LookupError& e) {
    return fail(TSS_ERR_LOOKUP, e.what());
  } catch (const tss::IoError& e) {
    return fail(TSS_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(TSS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TSS_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool valid_algorithm(tss_algorithm a) { return a >= TSS_RDP && a <= TSS_OS; }

tss::AlgorithmId to_cpp(tss_algorithm a) {
  switch (a) {
    case TSS_RDP: return tss::AlgorithmId::kRdp;
    case TSS_VW: return tss::AlgorithmId::kVw;
    case TSS_BU: return tss::AlgorithmId::kBu;
    case TSS_OS: break;
  }
  return tss::AlgorithmId::kOs;
}

tss::Split to_cpp(tss_split s) { return s == TSS_SPLIT_TRAIN ? tss::Split::kTrain : tss::Split::kTest; }

tss::TimeSeries series_from(const double* values, size_t length) {
  return tss::TimeSeries(std::vector<double>(values, values + length));
}

}  // namespace

extern "C" {

const char* tss_version(void) { return "1.0.0"; }

const char* tss_last_error(void) { return last_error.c_str(); }

const char* tss_status_string(tss_status status) {
  switch (status) {
    case TSS_OK: return "ok";
    case TSS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TSS_ERR_PARSE: return "parse error";
    case TSS_ERR_FORMAT: return "format error";
    case TSS_ERR_CONFIG: return "configuration error";
    case TSS_ERR_LOOKUP: return "lookup error";
    case TSS_ERR_IO: return "i/o error";
    case TSS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void tss_string_free(char* s) { std::free(s); }

tss_status tss_algorithm_parse(const char* name, tss_algorithm* out) {
  if (name == nullptr || out == nullptr) return fail(TSS_ERR_INVALID_ARGUMENT, "null argument");
  const auto alg = tss::parse_algorithm(name);
  if (!alg) return fail(TSS_ERR_INVALID_ARGUMENT, std::string("unknown algorithm '") + name + "'");
  switch (*alg) {
    case tss::AlgorithmId::kRdp: *out = TSS_RDP; break;
    case tss::AlgorithmId::kVw: *out = TSS_VW; break;
    case tss::AlgorithmId::kBu: *out = TSS_BU; break;
    case tss::AlgorithmId::kOs: *out = TSS_OS; break;
  }
  return TSS_OK;
}

const char* tss_algorithm_name(tss_algorithm alg) {
  if (!valid_algorithm(alg)) return "";
  return tss::algorithm_name(to_cpp(alg)).data();
}

tss_status tss_dataset_load(const char* data_dir, const char* name, tss_dataset** out) {
  if (data_dir == nullptr || name == nullptr || out == nullptr) return fail(TSS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new tss_dataset{tss::load_dataset(data_dir, name)};
    return TSS_OK;
  });
}

void tss_dataset_free(tss_dataset* d) { delete d; }

size_t tss_dataset_series_length(const tss_dataset* d) { return d == nullptr ? 0 : d->value.series_length; }

size_t tss_dataset_num_classes(const tss_dataset* d) { return d == nullptr ? 0 : d->value.num_classes(); }

size_t tss_dataset_split_size(const tss_dataset* d, tss_split split) {
  return d == nullptr ? 0 : d->value.split(to_cpp(split)).size();
}

tss_status tss_dataset_instance(const tss_dataset* d, tss_split split, size_t index, const double** values,
                                size_t* length, int* label) {
  if (d == nullptr) return fail(TSS_ERR_INVALID_ARGUMENT, "null dataset");
  const auto& instances = d->value.split(to_cpp(split));
  if (index >= instances.size()) {
    return fail(TSS_ERR_INVALID_ARGUMENT, "instance " + std::to_string(index) + " out of range");
  }
  const auto& inst = instances[index];
  if (values != nullptr) *values = inst.series.values().data();
  if (length != nullptr) *length = inst.series.size();
  if (label != nullptr) *label = inst.label;
  return TSS_OK;
}

tss_status tss_select_datasets(const char* data_dir, const char* selector, size_t max_length, char** out) {
  if (data_dir == nullptr || selector == nullptr || out == nullptr) {
    return fail(TSS_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    std::string joined;
    for (const auto& name : tss::select_datasets(data_dir, selector, max_length == 0 ? 200 : max_length)) {
      joined += name + "\n";
    }
    *out = dup_string(joined);
    return TSS_OK;
  });
}

tss_status tss_simplify(tss_algorithm alg, const double* values, size_t length, double alpha_c,
                        tss_simplification** out) {
  if (values == nullptr || out == nullptr || !valid_algorithm(alg)) return fail(TSS_ERR_INVALID_ARGUMENT, "bad argument");
  if (!(alpha_c >= 0.0 && alpha_c <= 1.0)) return fail(TSS_ERR_INVALID_ARGUMENT, "alpha_c must lie in [0, 1]");
  return guarded([&] {
    const auto ts = series_from(values, length);
    *out = new tss_simplification{tss::simplify(to_cpp(alg), ts, alpha_c), to_cpp(alg), alpha_c};
    return TSS_OK;
  });
}

tss_status tss_simplify_raw(tss_algorithm alg, const double* values, size_t length, double raw,
                            tss_simplification** out) {
  if (values == nullptr || out == nullptr || !valid_algorithm(alg)) return fail(TSS_ERR_INVALID_ARGUMENT, "bad argument");
  if (!(raw >= 0.0)) return fail(TSS_ERR_INVALID_ARGUMENT, "raw threshold must be non-negative");
  return guarded([&] {
    const auto ts = series_from(values, length);
    const auto a = to_cpp(alg);
    *out = new tss_simplification{tss::prepare(a, ts)->at_raw(raw), a, -1.0};
    return TSS_OK;
  });
}

tss_status tss_normalize_param(tss_algorithm alg, const double* values, size_t length, double alpha_c, double* raw) {
  if (values == nullptr || raw == nullptr || !valid_algorithm(alg)) return fail(TSS_ERR_INVALID_ARGUMENT, "bad argument");
  if (!(alpha_c >= 0.0 && alpha_c <= 1.0)) return fail(TSS_ERR_INVALID_ARGUMENT, "alpha_c must lie in [0, 1]");
  return guarded([&] {
    *raw = tss::normalize_param(to_cpp(alg), series_from(values, length), alpha_c);
    return TSS_OK;
  });
}

void tss_simplification_free(tss_simplification* s) { delete s; }

size_t tss_simplification_kept_count(const tss_simplification* s) {
  return s == nullptr ? 0 : s->value.kept_indices.size();
}

size_t tss_simplification_segment_count(const tss_simplification* s) {
  return s == nullptr ? 0 : s->value.segment_count();
}

tss_status tss_simplification_kept(const tss_simplification* s, const size_t** indices, const double** values) {
  if (s == nullptr) return fail(TSS_ERR_INVALID_ARGUMENT, "null simplification");
  if (indices != nullptr) *indices = s->value.kept_indices.data();
  if (values != nullptr) *values = s->value.kept_values.data();
  return TSS_OK;
}

tss_status tss_simplification_reconstruct(const tss_simplification* s, double* out, size_t length) {
  if (s == nullptr || out == nullptr) return fail(TSS_ERR_INVALID_ARGUMENT, "null argument");
  if (length != s->value.original_length) {
    return fail(TSS_ERR_INVALID_ARGUMENT, "output length must be " + std::to_string(s->value.original_length));
  }
  return guarded([&] {
    const auto r = tss::reconstruct(s->value);
    std::copy(r.values().begin(), r.values().end(), out);
    return TSS_OK;
  });
}

tss_status tss_simplification_json(const tss_simplification* s, char** out) {
  if (s == nullptr || out == nullptr) return fail(TSS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(tss::simplification_json(s->value, s->algorithm, s->alpha_c));
    return TSS_OK;
  });
}

tss_status tss_classifier_create(const tss_dataset* d, const char* spec, uint64_t seed, tss_classifier** out) {
  if (d == nullptr || spec == nullptr || out == nullptr) return fail(TSS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new tss_classifier{tss::make_classifier(spec, d->value.train, seed)};
    return TSS_OK;
  });
}

void tss_classifier_free(tss_classifier* c) { delete c; }

tss_status tss_classifier_predict(const tss_classifier* c, const double* values, size_t length, const char* dataset,
                                  size_t instance_id, const char* variant, int* label) {
  if (c == nullptr || values == nullptr || label == nullptr) return fail(TSS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::optional<tss::SeriesKey> key;
    if (dataset != nullptr) key = tss::SeriesKey{dataset, instance_id, variant != nullptr ? variant : "original"};
    *label = c->value->predict(std::span<const double>(values, length), key ? &*key : nullptr);
    return TSS_OK;
  });
}

tss_status tss_dtw_distance(const double* a, size_t na, const double* b, size_t nb, double* out) {
  if (a == nullptr || b == nullptr || out == nullptr || na == 0 || nb == 0) {
    return fail(TSS_ERR_INVALID_ARGUMENT, "dtw needs two nonempty series");
  }
  *out = tss::dtw_distance(std::span<const double>(a, na), std::span<const double>(b, nb));
  return TSS_OK;
}

tss_status tss_cohen_kappa(const int64_t* counts, size_t classes, double* out) {
  if (counts == nullptr || out == nullptr || classes == 0) return fail(TSS_ERR_INVALID_ARGUMENT, "bad argument");
  return guarded([&] {
    tss::ConfusionCounts c(classes, std::vector<std::int64_t>(counts, counts + classes * classes));
    *out = tss::cohen_kappa(c);
    return TSS_OK;
  });
}

tss_status tss_sweep(const tss_dataset* d, tss_algorithm alg, const tss_classifier* c, tss_split split,
                     size_t sample_size, uint64_t seed, size_t jobs, tss_curve** out) {
  if (d == nullptr || c == nullptr || out == nullptr || !valid_algorithm(alg)) {
    return fail(TSS_ERR_INVALID_ARGUMENT, "bad argument");
  }
  return guarded([&] {
    const auto pool = tss::stratified_sample(d->value.split(to_cpp(split)), sample_size == 0 ? 100 : sample_size,
                                             seed, to_cpp(split));
    tss::SweepOptions opts;
    opts.jobs = jobs == 0 ? 1 : jobs;
    *out = new tss_curve{tss::sweep(d->value.name, d->value.num_classes(), to_cpp(alg), *c->value, pool, opts)};
    return TSS_OK;
  });
}

void tss_curve_free(tss_curve* c) { delete c; }

size_t tss_curve_size(const tss_curve* c) { return c == nullptr ? 0 : c->value.points.size(); }

tss_status tss_curve_point_at(const tss_curve* c, size_t index, tss_curve_point* out) {
  if (c == nullptr || out == nullptr) return fail(TSS_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= c->value.points.size()) return fail(TSS_ERR_INVALID_ARGUMENT, "curve index out of range");
  const auto& p = c->value.points[index];
  *out = {p.alpha_c, p.mean_complexity, p.loyalty, p.kappa, p.mean_segments};
  return TSS_OK;
}

double tss_curve_auc(const tss_curve* c) { return c == nullptr ? 0.0 : tss::auc(c->value); }

double tss_curve_complexity_at_loyalty(const tss_curve* c, double target) {
  return c == nullptr ? 1.0 : tss::complexity_at_loyalty(c->value, target);
}

tss_status tss_curve_min_alpha_for_loyalty(const tss_curve* c, double target, double* alpha_c) {
  if (c == nullptr || alpha_c == nullptr) return fail(TSS_ERR_INVALID_ARGUMENT, "null argument");
  if (!(target > 0.0 && target <= 1.0)) return fail(TSS_ERR_INVALID_ARGUMENT, "loyalty target must lie in (0, 1]");
  *alpha_c = tss::min_alpha_for_loyalty(c->value, target);
  return TSS_OK;
}

tss_status tss_curve_csv(const tss_curve* c, char** out) {
  if (c == nullptr || out == nullptr) return fail(TSS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(tss::curve_csv(c->value));
    return TSS_OK;
  });
}

void tss_evaluate_options_init(tss_evaluate_options* o) {
  if (o == nullptr) return;
  *o = tss_evaluate_options{};
  o->dataset = "all";
  o->max_length = 200;
  o->algorithms = "all";
  o->classifier = "logreg";
  o->seed = 42;
  o->sample_size = 100;
  o->split = TSS_SPLIT_TEST;
  o->jobs = 1;
}

tss_status tss_run_evaluate(const tss_evaluate_options* o) {
  if (o == nullptr || o->data_dir == nullptr || o->out_dir == nullptr) {
    return fail(TSS_ERR_INVALID_ARGUMENT, "evaluate needs data_dir and out_dir");
  }
  tss::EvaluateConfig cfg;
  cfg.data_dir = o->data_dir;
  cfg.dataset = o->dataset != nullptr ? o->dataset : "all";
  cfg.max_length = o->max_length == 0 ? 200 : o->max_length;
  cfg.classifier = o->classifier != nullptr ? o->classifier : "logreg";
  cfg.seed = o->seed;
  cfg.sample_size = o->sample_size == 0 ? 100 : o->sample_size;
  cfg.split = to_cpp(o->split);
  cfg.out = o->out_dir;
  cfg.jobs = o->jobs == 0 ? 1 : o->jobs;
  const std::string algs = o->algorithms != nullptr ? o->algorithms : "all";
  if (algs != "all") {
    cfg.algorithms.clear();
    std::stringstream ss(algs);
    for (std::string item; std::getline(ss, item, ',');) {
      const auto a = tss::parse_algorithm(item);
      if (!a) return fail(TSS_ERR_INVALID_ARGUMENT, "unknown algorithm '" + item + "'");
      cfg.algorithms.push_back(*a);
    }
  }
  if (o->verbose) cfg.log = [](const std::string& line) { std::cerr << line << '\n'; };
  return guarded([&] {
    tss::run_evaluate(cfg);
    return TSS_OK;
  });
}

tss_status tss_run_characterize(const char* data_dir, const char* selector, size_t max_length, size_t jobs,
                                char** csv) {
  if (data_dir == nullptr || selector == nullptr || csv == nullptr) return fail(TSS_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *csv = dup_string(tss::run_characterize(data_dir, selector, max_length == 0 ? 200 : max_length, jobs == 0 ? 1 : jobs));
    return TSS_OK;
  });
}

tss_status tss_prototypes(const tss_dataset* d, size_t k, const char* metric, uint64_t seed, size_t jobs, char** json) {
  if (d == nullptr || json == nullptr) return fail(TSS_ERR_INVALID_ARGUMENT, "null argument");
  const auto m = tss::parse_metric(metric != nullptr ? metric : "dtw");
  if (!m) return fail(TSS_ERR_INVALID_ARGUMENT, std::string("unknown metric '") + metric + "'");
  return guarded([&] {
    const auto protos = tss::class_prototypes(d->value, k, *m, seed, jobs == 0 ? 1 : jobs);
    *json = dup_string(tss::prototypes_json(d->value, protos));
    return TSS_OK;
  });
}

void tss_bundle_options_init(tss_bundle_options* o) {
  if (o == nullptr) return;
  *o = tss_bundle_options{};
  o->algorithm = TSS_OS;
  o->alpha_c = 0.2;
  o->test_count = 50;
  o->batch = 10;
  o->k_per_class = 4;
  o->metric = "dtw";
  o->seed = 42;
  o->jobs = 1;
}

tss_status tss_export_bundle(const tss_dataset* d, const tss_classifier* c, const tss_bundle_options* o,
                             const char* out_dir) {
  if (d == nullptr || c == nullptr || o == nullptr || out_dir == nullptr || !valid_algorithm(o->algorithm)) {
    return fail(TSS_ERR_INVALID_ARGUMENT, "bad argument");
  }
  if (!(o->alpha_c >= 0.0 && o->alpha_c <= 1.0)) return fail(TSS_ERR_INVALID_ARGUMENT, "alpha_c must lie in [0, 1]");
  const auto m = tss::parse_metric(o->metric != nullptr ? o->metric : "dtw");
  if (!m) return fail(TSS_ERR_INVALID_ARGUMENT, "unknown metric");
  return guarded([&] {
    const auto protos = tss::class_prototypes(d->value, o->k_per_class, *m, o->seed, o->jobs == 0 ? 1 : o->jobs);
    tss::BundleOptions bo;
    bo.algorithm = to_cpp(o->algorithm);
    bo.alpha_c = o->alpha_c;
    bo.test_count = o->test_count;
    bo.batch = o->batch;
    bo.seed = o->seed;
    tss::export_prompt_bundle(d->value, protos, *c->value, bo, out_dir);
    return TSS_OK;
  });
}

tss_status tss_serve(const char* data_dir, const char* host, int port, size_t jobs, const char* static_dir) {
  if (data_dir == nullptr) return fail(TSS_ERR_INVALID_ARGUMENT, "null data_dir");
  return guarded([&] {
    tss::ServerOptions opts;
    opts.data_dir = data_dir;
    if (host != nullptr) opts.host = host;
    opts.port = port;
    opts.jobs = jobs == 0 ? 1 : jobs;
    if (static_dir != nullptr) opts.static_dir = static_dir;
    tss::Server server(opts);
    const int bound = server.bind();
    std::cerr << "serving " << data_dir << " on http://" << opts.host << ":" << bound << "\n";
    server.listen();
    return TSS_OK;
  });
}

}  // extern "C"
