// emorank/ranker.h

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

#ifndef EMORANK_RANKER_H_
#define EMORANK_RANKER_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emorank/types.h"

namespace emorank {

struct RankerConfig {
  double c = 1.0;              // slack trade-off
  int max_newton_iters = 50;
  double grad_tol = 1e-6;
  double armijo_c = 1e-4;      // sufficient-decrease constant, in (0,1)
  double armijo_shrink = 0.5;  // backtracking factor, in (0,1)
  double ridge_eps = 1e-8;     // added to the Hessian diagonal before solving
  bool standardize = false;    // per-dimension z-scoring of the inputs
};

void validate_config(const RankerConfig& config);

// Per-dimension z-score parameters, stored when RankerConfig.standardize is
// set. Constant dimensions keep stdev 1 so they pass through unchanged.
struct Standardization {
  std::vector<double> mean;
  std::vector<double> stdev;
};

// Linear ranking function r(x) = w.x for one emotion category, with the
// min-max statistics used to squash raw scores onto [0,1]. When
// standardization is present, w lives in z-scored space and score() applies
// the transform.
struct RankingModel {
  EmotionCategory category = EmotionCategory::kNeutral;
  std::vector<double> w;
  RankerConfig config;
  double final_objective = 0.0;
  double final_grad_norm = 0.0;
  std::optional<Standardization> standardization;
  std::optional<NormalizationStats> normalization;
};

struct FitReport {
  bool converged = false;
  int iterations = 0;
  // Objective after the initial point and after each accepted Newton step.
  std::vector<double> objective_trace;
};

// Value of the unconstrained primal
//   f(w) = 1/2 |w|^2 + C sum_O max(0, 1 - w.(x_i - x_j))^2
//                    + C sum_S (w.(x_i - x_j))^2,
// the quadratic-slack ranking problem with the optimal slacks substituted in.
double ranking_objective(std::span<const double> w,
                         std::span<const FeatureVector> data,
                         const PairConstraintSet& constraints, double c);

std::vector<double> ranking_gradient(std::span<const double> w,
                                     std::span<const FeatureVector> data,
                                     const PairConstraintSet& constraints,
                                     double c);

// Newton's method with Armijo backtracking. The generalized Hessian treats a
// pair sitting exactly on the margin as inactive. Returns the fitted model;
// a run that exhausts max_newton_iters is reported through FitReport rather
// than thrown.
RankingModel fit_ranker(std::span<const FeatureVector> data,
                        const PairConstraintSet& constraints,
                        const RankerConfig& config, EmotionCategory category,
                        FitReport* report = nullptr);

// Raw, un-normalized ranking score w.x.
double score(const RankingModel& model, std::span<const double> x);

void save_ranking_model(const RankingModel& model, const std::string& path);
RankingModel load_ranking_model(const std::string& path);

}  // namespace emorank

#endif  // EMORANK_RANKER_H_
