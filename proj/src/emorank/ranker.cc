// emorank/ranker.cc

// Copyright 2026  The Emorank Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "emorank/ranker.h"

#include <cmath>
#include <fstream>

#include <Eigen/Dense>

#include "json.hpp"

#include "emorank/util.h"

namespace emorank {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using nlohmann::json;
using nlohmann::ordered_json;

void check_dim(size_t got, size_t want, const char* what) {
  if (got != want) {
    throw Error(StatusCode::kDimMismatch,
                std::string(what) + ": dim " + std::to_string(got) +
                    " does not match feature dim " + std::to_string(want));
  }
}

size_t common_dim(std::span<const FeatureVector> data) {
  if (data.empty()) {
    throw Error(StatusCode::kInvalidArgument, "no feature vectors");
  }
  size_t dim = data.front().dim();
  if (dim == 0) {
    throw Error(StatusCode::kInvalidArgument, "feature dim must be >= 1");
  }
  for (const FeatureVector& x : data) {
    check_dim(x.dim(), dim, "feature vector");
  }
  return dim;
}

// Difference vectors x_i - x_j for each constraint pair.
struct DiffMatrices {
  MatrixXd ordered;  // one row per O pair
  MatrixXd similar;  // one row per S pair
};

DiffMatrices make_diffs(std::span<const FeatureVector> data,
                        const PairConstraintSet& constraints, size_t dim) {
  auto fill = [&](const std::vector<IndexPair>& pairs, MatrixXd& out) {
    out.resize(static_cast<Eigen::Index>(pairs.size()),
               static_cast<Eigen::Index>(dim));
    for (size_t p = 0; p < pairs.size(); ++p) {
      const IndexPair& pair = pairs[p];
      if (pair.i >= data.size() || pair.j >= data.size()) {
        throw Error(StatusCode::kInvalidArgument,
                    "constraint pair index out of range");
      }
      for (size_t d = 0; d < dim; ++d) {
        out(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(d)) =
            data[pair.i].values[d] - data[pair.j].values[d];
      }
    }
  };
  DiffMatrices diffs;
  fill(constraints.ordered, diffs.ordered);
  fill(constraints.similar, diffs.similar);
  return diffs;
}

double objective_impl(const VectorXd& w, const DiffMatrices& diffs, double c) {
  double f = 0.5 * w.squaredNorm();
  for (Eigen::Index p = 0; p < diffs.ordered.rows(); ++p) {
    double margin = 1.0 - diffs.ordered.row(p).dot(w);
    if (margin > 0.0) f += c * margin * margin;
  }
  for (Eigen::Index p = 0; p < diffs.similar.rows(); ++p) {
    double v = diffs.similar.row(p).dot(w);
    f += c * v * v;
  }
  return f;
}

VectorXd gradient_impl(const VectorXd& w, const DiffMatrices& diffs, double c) {
  VectorXd g = w;
  for (Eigen::Index p = 0; p < diffs.ordered.rows(); ++p) {
    double margin = 1.0 - diffs.ordered.row(p).dot(w);
    if (margin > 0.0) g -= 2.0 * c * margin * diffs.ordered.row(p).transpose();
  }
  for (Eigen::Index p = 0; p < diffs.similar.rows(); ++p) {
    double v = diffs.similar.row(p).dot(w);
    g += 2.0 * c * v * diffs.similar.row(p).transpose();
  }
  return g;
}

// Generalized Hessian: identity plus 2C d d^T for every similar pair and
// every ordered pair strictly inside its margin.
MatrixXd hessian_impl(const VectorXd& w, const DiffMatrices& diffs, double c,
                      double ridge_eps) {
  const Eigen::Index dim = w.size();
  MatrixXd h = MatrixXd::Identity(dim, dim) * (1.0 + ridge_eps);
  for (Eigen::Index p = 0; p < diffs.ordered.rows(); ++p) {
    double margin = 1.0 - diffs.ordered.row(p).dot(w);
    if (margin > 0.0) {
      h.noalias() += 2.0 * c * diffs.ordered.row(p).transpose() *
                     diffs.ordered.row(p);
    }
  }
  for (Eigen::Index p = 0; p < diffs.similar.rows(); ++p) {
    h.noalias() +=
        2.0 * c * diffs.similar.row(p).transpose() * diffs.similar.row(p);
  }
  return h;
}

Standardization fit_standardization(std::span<const FeatureVector> data,
                                    size_t dim) {
  Standardization stz;
  stz.mean.assign(dim, 0.0);
  stz.stdev.assign(dim, 0.0);
  for (const FeatureVector& x : data) {
    for (size_t d = 0; d < dim; ++d) stz.mean[d] += x.values[d];
  }
  for (size_t d = 0; d < dim; ++d) stz.mean[d] /= static_cast<double>(data.size());
  for (const FeatureVector& x : data) {
    for (size_t d = 0; d < dim; ++d) {
      double delta = x.values[d] - stz.mean[d];
      stz.stdev[d] += delta * delta;
    }
  }
  for (size_t d = 0; d < dim; ++d) {
    stz.stdev[d] = std::sqrt(stz.stdev[d] / static_cast<double>(data.size()));
    if (stz.stdev[d] == 0.0) stz.stdev[d] = 1.0;
  }
  return stz;
}

}  // namespace

void validate_config(const RankerConfig& config) {
  auto fail = [](const std::string& what) {
    throw Error(StatusCode::kInvalidArgument, "bad ranker config: " + what);
  };
  if (!(config.c > 0.0) || !std::isfinite(config.c)) fail("C must be positive");
  if (config.max_newton_iters <= 0) fail("max_newton_iters must be positive");
  if (!(config.grad_tol > 0.0)) fail("grad_tol must be positive");
  if (!(config.armijo_c > 0.0 && config.armijo_c < 1.0)) {
    fail("armijo_c must lie in (0,1)");
  }
  if (!(config.armijo_shrink > 0.0 && config.armijo_shrink < 1.0)) {
    fail("armijo_shrink must lie in (0,1)");
  }
  if (!(config.ridge_eps > 0.0)) fail("ridge_eps must be positive");
}

double ranking_objective(std::span<const double> w,
                         std::span<const FeatureVector> data,
                         const PairConstraintSet& constraints, double c) {
  size_t dim = common_dim(data);
  check_dim(w.size(), dim, "weight vector");
  DiffMatrices diffs = make_diffs(data, constraints, dim);
  return objective_impl(Eigen::Map<const VectorXd>(w.data(), w.size()), diffs, c);
}

std::vector<double> ranking_gradient(std::span<const double> w,
                                     std::span<const FeatureVector> data,
                                     const PairConstraintSet& constraints,
                                     double c) {
  size_t dim = common_dim(data);
  check_dim(w.size(), dim, "weight vector");
  DiffMatrices diffs = make_diffs(data, constraints, dim);
  VectorXd g =
      gradient_impl(Eigen::Map<const VectorXd>(w.data(), w.size()), diffs, c);
  return std::vector<double>(g.data(), g.data() + g.size());
}

RankingModel fit_ranker(std::span<const FeatureVector> data,
                        const PairConstraintSet& constraints,
                        const RankerConfig& config, EmotionCategory category,
                        FitReport* report) {
  validate_config(config);
  if (constraints.empty()) {
    throw Error(StatusCode::kInvalidArgument, "empty constraints");
  }
  const size_t dim = common_dim(data);

  std::vector<FeatureVector> standardized;
  std::optional<Standardization> stz;
  std::span<const FeatureVector> train = data;
  if (config.standardize) {
    stz = fit_standardization(data, dim);
    standardized.assign(data.begin(), data.end());
    for (FeatureVector& x : standardized) {
      for (size_t d = 0; d < dim; ++d) {
        x.values[d] = (x.values[d] - stz->mean[d]) / stz->stdev[d];
      }
    }
    train = standardized;
  }

  DiffMatrices diffs = make_diffs(train, constraints, dim);
  VectorXd w = VectorXd::Zero(static_cast<Eigen::Index>(dim));
  double f = objective_impl(w, diffs, config.c);

  FitReport local_report;
  FitReport& rep = report ? *report : local_report;
  rep = FitReport{};
  rep.objective_trace.push_back(f);

  VectorXd g = gradient_impl(w, diffs, config.c);
  for (int iter = 0; iter < config.max_newton_iters; ++iter) {
    if (g.norm() <= config.grad_tol) {
      rep.converged = true;
      break;
    }
    MatrixXd h = hessian_impl(w, diffs, config.c, config.ridge_eps);
    Eigen::LDLT<MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) {
      throw Error(StatusCode::kNotConverged,
                  "singular Newton system at iteration " + std::to_string(iter));
    }
    VectorXd step = solver.solve(-g);
    double slope = g.dot(step);
    if (!(slope < 0.0)) {
      throw Error(StatusCode::kNotConverged,
                  "Newton direction is not a descent direction at iteration " +
                      std::to_string(iter));
    }
    // Armijo backtracking, full step first.
    double t = 1.0;
    double f_new = objective_impl(w + t * step, diffs, config.c);
    while (f_new > f + config.armijo_c * t * slope) {
      t *= config.armijo_shrink;
      if (t < 1e-16) {
        throw Error(StatusCode::kNotConverged,
                    "line search stalled at iteration " + std::to_string(iter));
      }
      f_new = objective_impl(w + t * step, diffs, config.c);
    }
    w += t * step;
    f = f_new;
    g = gradient_impl(w, diffs, config.c);
    rep.iterations = iter + 1;
    rep.objective_trace.push_back(f);
  }
  if (g.norm() <= config.grad_tol) rep.converged = true;

  RankingModel model;
  model.category = category;
  model.w.assign(w.data(), w.data() + w.size());
  model.config = config;
  model.final_objective = f;
  model.final_grad_norm = g.norm();
  model.standardization = std::move(stz);
  return model;
}

double score(const RankingModel& model, std::span<const double> x) {
  check_dim(x.size(), model.w.size(), "score input");
  double acc = 0.0;
  if (model.standardization) {
    const Standardization& stz = *model.standardization;
    for (size_t d = 0; d < x.size(); ++d) {
      acc += model.w[d] * (x[d] - stz.mean[d]) / stz.stdev[d];
    }
  } else {
    for (size_t d = 0; d < x.size(); ++d) acc += model.w[d] * x[d];
  }
  return acc;
}

void save_ranking_model(const RankingModel& model, const std::string& path) {
  ordered_json object;
  object["format_version"] = 1;
  object["category"] = category_name(model.category);
  object["w"] = model.w;
  object["config"] = {
      {"C", model.config.c},
      {"max_newton_iters", model.config.max_newton_iters},
      {"grad_tol", model.config.grad_tol},
      {"armijo_c", model.config.armijo_c},
      {"armijo_shrink", model.config.armijo_shrink},
      {"ridge_eps", model.config.ridge_eps},
      {"standardize", model.config.standardize},
  };
  object["final_objective"] = model.final_objective;
  object["final_grad_norm"] = model.final_grad_norm;
  if (model.normalization) {
    object["normalization"] = {{"min_raw", model.normalization->min_raw},
                               {"max_raw", model.normalization->max_raw}};
  }
  if (model.standardization) {
    object["standardization"] = {{"mean", model.standardization->mean},
                                 {"stdev", model.standardization->stdev}};
  }
  std::ofstream out(path);
  if (!out) {
    throw Error(StatusCode::kIoError, "cannot open '" + path + "' for writing");
  }
  out << object.dump(2) << "\n";
}

RankingModel load_ranking_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(StatusCode::kIoError, "cannot open '" + path + "' for reading");
  }
  json object;
  try {
    object = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(StatusCode::kParseError,
                path + ": invalid JSON: " + std::string(e.what()));
  }
  try {
    if (object.at("format_version").get<int>() != 1) {
      throw Error(StatusCode::kParseError,
                  path + ": unsupported format_version");
    }
    RankingModel model;
    model.category = parse_category(object.at("category").get<std::string>());
    model.w = object.at("w").get<std::vector<double>>();
    const json& config = object.at("config");
    model.config.c = config.at("C").get<double>();
    model.config.max_newton_iters = config.at("max_newton_iters").get<int>();
    model.config.grad_tol = config.at("grad_tol").get<double>();
    model.config.armijo_c = config.at("armijo_c").get<double>();
    model.config.armijo_shrink = config.at("armijo_shrink").get<double>();
    model.config.ridge_eps = config.at("ridge_eps").get<double>();
    model.config.standardize = config.at("standardize").get<bool>();
    model.final_objective = object.at("final_objective").get<double>();
    model.final_grad_norm = object.at("final_grad_norm").get<double>();
    if (object.contains("normalization")) {
      NormalizationStats stats;
      stats.category = model.category;
      stats.min_raw = object["normalization"].at("min_raw").get<double>();
      stats.max_raw = object["normalization"].at("max_raw").get<double>();
      validate_stats(stats);
      model.normalization = stats;
    }
    if (object.contains("standardization")) {
      Standardization stz;
      stz.mean = object["standardization"].at("mean").get<std::vector<double>>();
      stz.stdev =
          object["standardization"].at("stdev").get<std::vector<double>>();
      if (stz.mean.size() != model.w.size() ||
          stz.stdev.size() != model.w.size()) {
        throw Error(StatusCode::kParseError,
                    path + ": standardization dim mismatch");
      }
      model.standardization = std::move(stz);
    }
    if (model.w.empty()) {
      throw Error(StatusCode::kParseError, path + ": empty weight vector");
    }
    for (double v : model.w) {
      if (!std::isfinite(v)) {
        throw Error(StatusCode::kParseError, path + ": non-finite weight");
      }
    }
    validate_config(model.config);
    return model;
  } catch (const json::exception& e) {
    throw Error(StatusCode::kParseError,
                path + ": bad model JSON: " + std::string(e.what()));
  }
}

}  // namespace emorank
