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

#include <algorithm>
#include <cmath>
#include <set>

#include <ceres/ceres.h>

#include "tss/classifiers.hpp"
#include "tss/error.hpp"

namespace tss {

void LogisticRegression::set_shape(std::size_t classes, std::size_t features) {
  classes_ = classes;
  features_ = features;
  params_.assign(classes * features + classes, 0.0);
}

void LogisticRegression::scores(std::span<const double> x, std::span<double> out) const {
  for (std::size_t c = 0; c < classes_; ++c) {
    const double* w = params_.data() + c * features_;
    double s = params_[classes_ * features_ + c];
    for (std::size_t f = 0; f < features_; ++f) s += w[f] * x[f];
    out[c] = s;
  }
}

namespace {

void check_length(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw ConfigError("logreg expects series of length " + std::to_string(expected) + ", got " +
                      std::to_string(got));
  }
}

}  // namespace

std::vector<double> LogisticRegression::probabilities(std::span<const double> series) const {
  check_length(features_, series.size());
  std::vector<double> p(classes_);
  scores(series, p);
  const double top = *std::max_element(p.begin(), p.end());
  double z = 0.0;
  for (double& v : p) {
    v = std::exp(v - top);
    z += v;
  }
  for (double& v : p) v /= z;
  return p;
}

int LogisticRegression::predict(std::span<const double> series, const SeriesKey*) const {
  if (classes_ == 0) throw ConfigError("logreg used before fit");
  check_length(features_, series.size());
  std::vector<double> s(classes_);
  scores(series, s);
  // Softmax is monotone, so the argmax of the scores is the argmax class;
  // max_element returns the first maximum, i.e. the lowest class id.
  return static_cast<int>(std::max_element(s.begin(), s.end()) - s.begin());
}

double LogisticRegression::loss(std::span<const LabeledInstance> data) const {
  double total = 0.0;
  for (const auto& inst : data) {
    const auto p = probabilities(inst.series.values());
    total -= std::log(std::max(p[static_cast<std::size_t>(inst.label)], 1e-300));
  }
  total /= static_cast<double>(data.size());
  double reg = 0.0;
  for (std::size_t i = 0; i < classes_ * features_; ++i) reg += params_[i] * params_[i];
  return total + 0.5 * opts_.l2 * reg;
}

std::vector<double> LogisticRegression::gradient(std::span<const LabeledInstance> data) const {
  std::vector<double> g(params_.size(), 0.0);
  const double inv_m = 1.0 / static_cast<double>(data.size());
  for (const auto& inst : data) {
    const auto x = inst.series.values();
    const auto p = probabilities(x);
    for (std::size_t c = 0; c < classes_; ++c) {
      const double r = (p[c] - (static_cast<int>(c) == inst.label ? 1.0 : 0.0)) * inv_m;
      double* gw = g.data() + c * features_;
      for (std::size_t f = 0; f < features_; ++f) gw[f] += r * x[f];
      g[classes_ * features_ + c] += r;
    }
  }
  for (std::size_t i = 0; i < classes_ * features_; ++i) g[i] += opts_.l2 * params_[i];
  return g;
}

namespace {

class Objective final : public ceres::FirstOrderFunction {
 public:
  Objective(LogisticRegression& model, std::span<const LabeledInstance> data) : model_(model), data_(data) {}

  bool Evaluate(const double* parameters, double* cost, double* gradient) const override {
    const std::size_t size = model_.parameters().size();
    model_.set_parameters(std::vector<double>(parameters, parameters + size));
    *cost = model_.loss(data_);
    if (gradient != nullptr) {
      const auto g = model_.gradient(data_);
      std::copy(g.begin(), g.end(), gradient);
    }
    return true;
  }

  int NumParameters() const override { return static_cast<int>(model_.parameters().size()); }

 private:
  LogisticRegression& model_;
  std::span<const LabeledInstance> data_;
};

class RecordCost final : public ceres::IterationCallback {
 public:
  explicit RecordCost(std::vector<double>& out) : out_(out) {}
  ceres::CallbackReturnType operator()(const ceres::IterationSummary& s) override {
    out_.push_back(s.cost);
    return ceres::SOLVER_CONTINUE;
  }

 private:
  std::vector<double>& out_;
};

}  // namespace

void LogisticRegression::fit(std::span<const LabeledInstance> train) {
  if (train.empty()) throw ConfigError("logreg needs a nonempty training set");
  std::set<int> labels;
  for (const auto& inst : train) labels.insert(inst.label);
  if (labels.size() < 2) throw ConfigError("logreg needs at least 2 classes in the training set");
  for (const auto& inst : train) check_length(train.front().series.size(), inst.series.size());

  set_shape(static_cast<std::size_t>(*labels.rbegin()) + 1, train.front().series.size());
  history_.clear();

  std::vector<double> x(params_.size(), 0.0);
  RecordCost record(history_);
  ceres::GradientProblemSolver::Options options;
  options.line_search_direction_type = ceres::LBFGS;
  options.max_num_iterations = opts_.max_iterations;
  options.gradient_tolerance = opts_.gradient_tolerance;
  options.function_tolerance = 1e-14;
  options.parameter_tolerance = 1e-14;
  options.logging_type = ceres::SILENT;
  options.callbacks.push_back(&record);
  ceres::GradientProblem problem(new Objective(*this, train));
  ceres::GradientProblemSolver::Summary summary;
  ceres::Solve(options, problem, x.data(), &summary);
  params_ = std::move(x);
}

std::unique_ptr<Classifier> fit_logreg(std::span<const LabeledInstance> train, const LogRegOptions& opts) {
  auto clf = std::make_unique<LogisticRegression>(opts);
  clf->fit(train);
  return clf;
}

}  // namespace tss
