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

#include "tss/server.hpp"

#include <atomic>
#include <chrono>
#include <future>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "tss/characterization.hpp"
#include "tss/classifiers.hpp"
#include "tss/error.hpp"
#include "tss/evaluation.hpp"
#include "tss/prototypes.hpp"
#include "tss/simplify.hpp"
#include "tss/timeseries.hpp"

namespace tss {

using json = nlohmann::ordered_json;

namespace {

// Raised by handlers to produce a JSON error with a status code.
struct HttpError {
  int status;
  std::string message;
};

json curve_json(const EvaluationCurve& c) {
  json pts = json::array();
  for (const auto& p : c.points) {
    pts.push_back({{"alpha_c", p.alpha_c},
                   {"mean_complexity", p.mean_complexity},
                   {"loyalty", p.loyalty},
                   {"kappa", p.kappa},
                   {"mean_segments", p.mean_segments}});
  }
  return {{"dataset", c.dataset},
          {"algorithm", algorithm_name(c.algorithm)},
          {"classifier", c.classifier},
          {"seed", c.seed},
          {"auc", auc(c)},
          {"points", std::move(pts)}};
}

json resolve_json(const EvaluationCurve& c, double target) {
  const auto& p = c.points[min_alpha_index_for_loyalty(c, target)];
  return {{"dataset", c.dataset},
          {"algorithm", algorithm_name(c.algorithm)},
          {"classifier", c.classifier},
          {"seed", c.seed},
          {"loyalty_target", target},
          {"alpha_c", p.alpha_c},
          {"achieved_loyalty", p.loyalty},
          {"kappa", p.kappa},
          {"mean_segments", p.mean_segments},
          {"mean_complexity", p.mean_complexity}};
}

json simplification_body(const Simplification& s) {
  return {{"kept_indices", s.kept_indices},
          {"kept_values", s.kept_values},
          {"reconstructed", reconstruct(s).vec()},
          {"segment_count", s.segment_count()},
          {"complexity", complexity_of(s)}};
}

}  // namespace

struct Server::Impl {
  using CurvePtr = std::shared_ptr<const EvaluationCurve>;

  struct CurveJob {
    std::shared_future<CurvePtr> result;
    std::atomic<std::size_t> done{0};
    std::size_t total = 0;
  };

  struct Ticket {  // one polling id: a curve job plus what to report from it
    std::shared_ptr<CurveJob> job;
    std::optional<double> target;  // resolve-loyalty when set, curve otherwise
  };

  explicit Impl(ServerOptions o) : opts(std::move(o)) {}

  ServerOptions opts;
  httplib::Server http;
  int bound_port = -1;

  std::shared_mutex mutex;  // guards every map below; values are immutable once published
  std::map<std::string, std::shared_ptr<const Dataset>> datasets;
  std::map<std::string, std::shared_ptr<const DatasetCharacteristics>> characteristics;
  std::map<std::string, std::shared_ptr<std::shared_future<std::shared_ptr<const Classifier>>>> classifiers;
  std::map<std::string, std::shared_ptr<CurveJob>> curves;
  std::map<std::string, std::shared_ptr<const PrototypeSet>> prototypes;
  std::map<std::string, Ticket> tickets;
  std::size_t next_ticket = 1;
  std::atomic<std::size_t> sweeps{0};

  std::mutex workers_mutex;
  std::vector<std::thread> workers;

  ~Impl() {
    std::lock_guard lock(workers_mutex);
    for (auto& t : workers) {
      if (t.joinable()) t.join();
    }
  }

  template <typename T, typename Make>
  std::shared_ptr<const T> cached(std::map<std::string, std::shared_ptr<const T>>& cache, const std::string& key,
                                  Make make) {
    {
      std::shared_lock lock(mutex);
      if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto value = std::make_shared<const T>(make());
    std::unique_lock lock(mutex);
    return cache.emplace(key, std::move(value)).first->second;  // first publisher wins
  }

  std::shared_ptr<const Dataset> dataset(const std::string& name) {
    if (name.empty() || name.find('/') != std::string::npos || name.find("..") != std::string::npos) {
      throw HttpError{404, "unknown dataset '" + name + "'"};
    }
    const auto& dir = opts.data_dir;
    if (!std::filesystem::exists(dir / (name + "_TRAIN.tsv")) || !std::filesystem::exists(dir / (name + "_TEST.tsv"))) {
      throw HttpError{404, "unknown dataset '" + name + "'"};
    }
    return cached(datasets, name, [&] { return load_dataset(dir, name); });
  }

  std::shared_ptr<const Classifier> classifier(const std::shared_ptr<const Dataset>& d, const std::string& spec,
                                               std::uint64_t seed) {
    const std::string key = d->name + "|" + spec + "|" + std::to_string(seed);
    std::shared_ptr<std::shared_future<std::shared_ptr<const Classifier>>> slot;
    std::promise<std::shared_ptr<const Classifier>> promise;
    bool owner = false;
    {
      std::unique_lock lock(mutex);
      auto& entry = classifiers[key];
      if (!entry) {
        entry = std::make_shared<std::shared_future<std::shared_ptr<const Classifier>>>(promise.get_future().share());
        owner = true;
      }
      slot = entry;
    }
    if (owner) {
      try {
        promise.set_value(std::shared_ptr<const Classifier>(make_classifier(spec, d->train, seed)));
      } catch (...) {
        promise.set_exception(std::current_exception());
        std::unique_lock lock(mutex);
        classifiers.erase(key);
      }
    }
    return slot->get();
  }

  // Single-flight: the first request for a key starts the sweep, later ones
  // share its future.
  std::shared_ptr<CurveJob> curve_job(const std::string& dataset_name, AlgorithmId alg, const std::string& clf_spec,
                                      std::uint64_t seed) {
    auto d = dataset(dataset_name);
    const std::string key =
        dataset_name + "|" + std::string(algorithm_name(alg)) + "|" + clf_spec + "|" + std::to_string(seed);
    {
      std::shared_lock lock(mutex);
      if (auto it = curves.find(key); it != curves.end()) return it->second;
    }
    auto job = std::make_shared<CurveJob>();
    auto promise = std::make_shared<std::promise<CurvePtr>>();
    job->result = promise->get_future().share();
    {
      std::unique_lock lock(mutex);
      auto [it, inserted] = curves.emplace(key, job);
      if (!inserted) return it->second;
    }
    const auto pool = std::make_shared<SamplePool>(stratified_sample(d->test, opts.sample_size, seed, Split::kTest));
    job->total = pool->instances.size();
    std::lock_guard lock(workers_mutex);
    workers.emplace_back([this, d, alg, clf_spec, seed, pool, job, promise] {
      try {
        auto clf = classifier(d, clf_spec, seed);
        SweepOptions so;
        so.jobs = opts.jobs;
        so.progress = &job->done;
        auto curve = std::make_shared<const EvaluationCurve>(sweep(d->name, d->num_classes(), alg, *clf, *pool, so));
        ++sweeps;
        promise->set_value(std::move(curve));
      } catch (...) {
        promise->set_exception(std::current_exception());
      }
    });
    return job;
  }

  json job_status(const std::string& id, const Ticket& t) {
    json body{{"job_id", id}};
    if (t.job->result.wait_for(std::chrono::seconds(0)) != std::future_status::ready) {
      body["status"] = "running";
      body["progress"] = {{"done", t.job->done.load()}, {"total", t.job->total}};
      return body;
    }
    try {
      const auto curve = t.job->result.get();
      body["status"] = "done";
      body["result"] = t.target ? resolve_json(*curve, *t.target) : curve_json(*curve);
    } catch (const std::exception& e) {
      body["status"] = "error";
      body["error"] = e.what();
    }
    return body;
  }

  // Waits up to the sync budget; answers 200 with the result or 202 with a ticket.
  std::pair<int, json> respond_with_job(std::shared_ptr<CurveJob> job, std::optional<double> target) {
    const auto wait = std::chrono::duration<double>(opts.sync_wait_seconds);
    if (job->result.wait_for(wait) == std::future_status::ready) {
      const auto curve = job->result.get();  // rethrows sweep failures
      return {200, target ? resolve_json(*curve, *target) : curve_json(*curve)};
    }
    std::string id;
    Ticket t{std::move(job), target};
    {
      std::unique_lock lock(mutex);
      id = std::to_string(next_ticket++);
      tickets.emplace(id, t);
    }
    json body = job_status(id, t);
    body["poll"] = "/api/jobs/" + id;
    return {202, body};
  }

  // --- handlers -------------------------------------------------------------

  json list_datasets_body() {
    json out = json::array();
    for (const auto& name : tss::list_datasets(opts.data_dir)) {
      json entry{{"name", name}};
      try {
        auto d = dataset(name);
        auto c = cached(characteristics, name, [&] { return characterize_dataset(*d, opts.jobs); });
        entry["length"] = d->series_length;
        entry["classes"] = d->num_classes();
        entry["train_size"] = d->train.size();
        entry["test_size"] = d->test.size();
        entry["characteristics"] = {{"stationarity", stationarity_name(c->stationarity)},
                                    {"stationary_fraction", c->stationary_fraction},
                                    {"seasonal", c->seasonal},
                                    {"seasonal_fraction", c->seasonal_fraction},
                                    {"mean_entropy", c->mean_entropy},
                                    {"entropy_bin", entropy_bin_name(c->entropy)}};
      } catch (const HttpError& e) {
        entry["error"] = e.message;
      } catch (const std::exception& e) {
        entry["error"] = e.what();
      }
      out.push_back(std::move(entry));
    }
    return out;
  }

  static AlgorithmId algorithm_param(const std::string& s) {
    auto alg = parse_algorithm(s);
    if (!alg) throw HttpError{422, "unknown algorithm '" + s + "'"};
    return *alg;
  }

  static double alpha_param(double a) {
    if (!(a >= 0.0 && a <= 1.0)) throw HttpError{422, "alpha_c must lie in [0, 1]"};
    return a;
  }

  static json parse_body(const httplib::Request& req) {
    json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded() || !body.is_object()) throw HttpError{400, "request body must be a JSON object"};
    return body;
  }

  template <typename T>
  static T field(const json& body, const char* name, std::optional<T> fallback = std::nullopt) {
    if (!body.contains(name)) {
      if (fallback) return *fallback;
      throw HttpError{422, std::string("missing field '") + name + "'"};
    }
    try {
      return body.at(name).get<T>();
    } catch (const json::exception&) {
      throw HttpError{422, std::string("field '") + name + "' has the wrong type"};
    }
  }

  static std::string query(const httplib::Request& req, const char* name, std::optional<std::string> fallback = {}) {
    if (req.has_param(name)) return req.get_param_value(name);
    if (fallback) return *fallback;
    throw HttpError{422, std::string("missing query parameter '") + name + "'"};
  }

  template <typename T>
  static T number(const std::string& s, const char* name) {
    try {
      std::size_t used = 0;
      T v;
      if constexpr (std::is_floating_point_v<T>) {
        v = static_cast<T>(std::stod(s, &used));
      } else {
        const long long x = std::stoll(s, &used);
        if (x < 0) throw std::invalid_argument("negative");
        v = static_cast<T>(x);
      }
      if (used != s.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw HttpError{422, std::string("bad value for '") + name + "'"};
    }
  }

  json simplify_body(const httplib::Request& req) {
    const json body = parse_body(req);
    auto d = dataset(field<std::string>(body, "dataset"));
    const auto alg = algorithm_param(field<std::string>(body, "algorithm"));
    const double alpha_c = alpha_param(field<double>(body, "alpha_c"));
    const auto split_s = field<std::string>(body, "split", std::string("test"));
    if (split_s != "test" && split_s != "train") throw HttpError{422, "split must be train or test"};
    const Split split = split_s == "train" ? Split::kTrain : Split::kTest;
    const auto& instances = d->split(split);
    const auto id = field<long long>(body, "instance_id");
    if (id < 0 || static_cast<std::size_t>(id) >= instances.size()) {
      throw HttpError{404, "unknown instance " + std::to_string(id)};
    }
    const auto& inst = instances[static_cast<std::size_t>(id)];
    const auto s = simplify(alg, inst.series, alpha_c);
    json out{{"dataset", d->name},          {"split", split_s},         {"instance_id", inst.id},
             {"label", inst.label},         {"algorithm", algorithm_name(alg)}, {"alpha_c", alpha_c},
             {"n", s.original_length},      {"original", inst.series.vec()}};
    out.update(simplification_body(s));
    return out;
  }

  std::pair<int, json> resolve_body(const httplib::Request& req) {
    const json body = parse_body(req);
    const double target = field<double>(body, "loyalty_target");
    if (!(target > 0.0 && target <= 1.0)) throw HttpError{422, "loyalty_target must lie in (0, 1]"};
    const auto name = field<std::string>(body, "dataset");
    const auto alg = algorithm_param(field<std::string>(body, "algorithm", std::string("rdp")));
    const auto clf = field<std::string>(body, "classifier", std::string("knn"));
    const auto seed = field<std::uint64_t>(body, "seed", std::uint64_t{42});
    return respond_with_job(curve_job(name, alg, clf, seed), target);
  }

  std::pair<int, json> curve_body(const httplib::Request& req) {
    const auto alg = algorithm_param(query(req, "algorithm", "rdp"));
    const auto clf = query(req, "classifier", "knn");
    const auto seed = number<std::uint64_t>(query(req, "seed", "42"), "seed");
    return respond_with_job(curve_job(query(req, "dataset"), alg, clf, seed), std::nullopt);
  }

  json prototypes_body(const httplib::Request& req) {
    auto d = dataset(query(req, "dataset"));
    const auto k = number<std::size_t>(query(req, "k", "4"), "k");
    const auto alg = algorithm_param(query(req, "algorithm", "rdp"));
    const double alpha_c = alpha_param(number<double>(query(req, "alpha_c", "1"), "alpha_c"));
    const auto metric_s = query(req, "metric", "dtw");
    const auto metric = parse_metric(metric_s);
    if (!metric) throw HttpError{422, "unknown metric '" + metric_s + "'"};
    const auto seed = number<std::uint64_t>(query(req, "seed", "42"), "seed");

    const std::string key = d->name + "|" + std::to_string(k) + "|" + metric_s + "|" + std::to_string(seed);
    std::shared_ptr<const PrototypeSet> protos;
    try {
      protos = cached(prototypes, key, [&] { return class_prototypes(*d, k, *metric, seed, opts.jobs); });
    } catch (const ConfigError& e) {
      throw HttpError{422, e.what()};
    }

    json list = json::array();
    for (const auto& cp : protos->classes) {
      for (std::size_t i = 0; i < cp.instance_ids.size(); ++i) {
        list.push_back({{"label", cp.label},
                        {"raw_label", d->raw_labels.at(static_cast<std::size_t>(cp.label))},
                        {"instance_id", cp.instance_ids[i]},
                        {"raw", cp.series[i].vec()},
                        {"simplified", simplification_body(simplify(alg, cp.series[i], alpha_c))}});
      }
    }
    return {{"dataset", d->name}, {"k", k},         {"metric", metric_s},   {"seed", seed},
            {"algorithm", algorithm_name(alg)}, {"alpha_c", alpha_c}, {"split", "train"},
            {"prototypes", std::move(list)}};
  }

  template <typename Fn>
  httplib::Server::Handler wrap(Fn fn) {
    return [fn](const httplib::Request& req, httplib::Response& res) {
      int status = 200;
      json body;
      try {
        auto r = fn(req);
        if constexpr (std::is_same_v<decltype(r), json>) {
          body = std::move(r);
        } else {
          status = r.first;
          body = std::move(r.second);
        }
      } catch (const HttpError& e) {
        status = e.status;
        body = {{"error", e.message}};
      } catch (const ConfigError& e) {
        status = 422;
        body = {{"error", e.what()}};
      } catch (const LookupError& e) {
        status = 422;
        body = {{"error", e.what()}};
      } catch (const std::exception& e) {
        status = 500;
        body = {{"error", e.what()}};
      }
      res.status = status;
      res.set_content(body.dump(), "application/json");
    };
  }

  void routes() {
    http.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
    http.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    http.Get("/api/datasets", wrap([this](const httplib::Request&) { return list_datasets_body(); }));
    http.Post("/api/simplify", wrap([this](const httplib::Request& r) { return simplify_body(r); }));
    http.Post("/api/resolve-loyalty", wrap([this](const httplib::Request& r) { return resolve_body(r); }));
    http.Get("/api/curve", wrap([this](const httplib::Request& r) { return curve_body(r); }));
    http.Get("/api/prototypes", wrap([this](const httplib::Request& r) { return prototypes_body(r); }));
    http.Get(R"(/api/jobs/(\d+))", wrap([this](const httplib::Request& r) {
               const std::string id = r.matches[1];
               Ticket t;
               {
                 std::shared_lock lock(mutex);
                 auto it = tickets.find(id);
                 if (it == tickets.end()) throw HttpError{404, "unknown job " + id};
                 t = it->second;
               }
               return job_status(id, t);
             }));
    if (!opts.static_dir.empty()) http.set_mount_point("/", opts.static_dir.string());
  }
};

Server::Server(ServerOptions opts) : impl_(std::make_unique<Impl>(std::move(opts))) {
  if (!std::filesystem::is_directory(impl_->opts.data_dir)) {
    throw IoError("data directory not found: " + impl_->opts.data_dir.string());
  }
  impl_->routes();
}

Server::~Server() { stop(); }

int Server::bind() {
  auto& i = *impl_;
  i.bound_port = i.opts.port == 0 ? i.http.bind_to_any_port(i.opts.host)
                                  : (i.http.bind_to_port(i.opts.host, i.opts.port) ? i.opts.port : -1);
  if (i.bound_port < 0) throw IoError("cannot bind " + i.opts.host + ":" + std::to_string(i.opts.port));
  return i.bound_port;
}

void Server::listen() { impl_->http.listen_after_bind(); }

void Server::stop() {
  if (impl_) impl_->http.stop();
}

std::size_t Server::sweeps_computed() const { return impl_->sweeps.load(); }

}  // namespace tss
