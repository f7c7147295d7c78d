// tests/test_ranker.cc

// Copyright 2026 The emorank authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABILITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "emorank/constraints.h"
#include "emorank/error.h"
#include "emorank/ranker.h"
#include "emorank/types.h"
#include "oracles.h"
#include "test_util.h"

using namespace emorank;
using emorank_test::TempDir;
using emorank_test::contains;
using emorank_test::fd_gradient;
using emorank_test::oracle_gradient;
using emorank_test::oracle_minimize;
using emorank_test::oracle_objective;
using emorank_test::random_ranking_instance;
using emorank_test::write_file;

namespace {

template <typename Fn>
std::string thrown_message(Fn &&fn) {
  try {
    fn();
  } catch (const std::exception &e) {
    return e.what();
  }
  return "";
}

std::vector<FeatureVector> points(const std::vector<std::vector<double>> &raw) {
  std::vector<FeatureVector> data;
  for (const auto &values : raw) data.push_back(FeatureVector{values});
  return data;
}

// One emotional point at 1, one neutral at 0, single ordered pair.
struct Scalar1D {
  std::vector<FeatureVector> data = points({{1.0}, {0.0}});
  PairConstraintSet constraints;
  Scalar1D() { constraints.ordered.push_back(IndexPair{0, 1}); }
};

double l2(const std::vector<double> &v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

double rel_gap(double a, double b) {
  return std::fabs(a - b) / std::max(1.0, std::fabs(b));
}

}  // namespace

TEST_CASE("objective values at hand-checked points") {
  Scalar1D inst;
  CHECK(ranking_objective(std::vector<double>{0.0}, inst.data,
                          inst.constraints, 1.0) == doctest::Approx(1.0));
  CHECK(ranking_objective(std::vector<double>{2.0 / 3.0}, inst.data,
                          inst.constraints, 1.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  PairConstraintSet similar_only;
  similar_only.similar.push_back(IndexPair{0, 1});
  CHECK(ranking_objective(std::vector<double>{0.0}, inst.data, similar_only,
                          1.0) == doctest::Approx(0.0));

  // Matches the independent reimplementation everywhere, not just at anchors.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto instance = random_ranking_instance(rng);
    std::vector<double> w(instance.data.front().dim());
    for (auto &v : w) v = (double(rng() % 2000) - 1000.0) / 400.0;
    double lib = ranking_objective(w, instance.data, instance.constraints,
                                   instance.c);
    double ref = oracle_objective(w, instance.data, instance.constraints,
                                  instance.c);
    CHECK(lib == doctest::Approx(ref).epsilon(1e-12));
  }
}

TEST_CASE("analytic gradient agrees with central differences") {
  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 50) {
    auto instance = random_ranking_instance(rng);
    size_t dim = instance.data.front().dim();
    std::vector<double> w(dim);
    for (auto &v : w) v = (double(rng() % 2000) - 1000.0) / 1000.0;

    // Stay away from the hinge boundary, where the objective is only C^1 and
    // the finite-difference error degrades.
    bool near_kink = false;
    for (const auto &p : instance.constraints.ordered) {
      double resp = emorank_test::oracle_pair_response(
          w, instance.data[p.i], instance.data[p.j]);
      if (std::fabs(1.0 - resp) < 1e-3) near_kink = true;
    }
    if (near_kink) continue;

    std::vector<double> g =
        ranking_gradient(w, instance.data, instance.constraints, instance.c);
    std::vector<double> g_fd = fd_gradient(
        [&](const std::vector<double> &p) {
          return oracle_objective(p, instance.data, instance.constraints,
                                  instance.c);
        },
        w, 1e-6);
    std::vector<double> g_ref =
        oracle_gradient(w, instance.data, instance.constraints, instance.c);

    double diff_fd = 0.0, diff_ref = 0.0;
    for (size_t d = 0; d < dim; ++d) {
      diff_fd = std::max(diff_fd, std::fabs(g[d] - g_fd[d]));
      diff_ref = std::max(diff_ref, std::fabs(g[d] - g_ref[d]));
    }
    double scale = std::max(1.0, l2(g_fd));
    CHECK(diff_fd / scale < 1e-5);
    CHECK(diff_ref < 1e-10);
    ++checked;
  }
}

TEST_CASE("closed-form solutions for single-pair problems") {
  for (double c : {0.1, 1.0, 10.0}) {
    Scalar1D inst;
    RankerConfig config;
    config.c = c;
    FitReport report;
    RankingModel model = fit_ranker(inst.data, inst.constraints, config,
                                    EmotionCategory::kHappy, &report);
    double expected = 2.0 * c / (1.0 + 2.0 * c);
    REQUIRE(model.w.size() == 1);
    CHECK(std::fabs(model.w[0] - expected) <= 1e-6);
    CHECK(report.converged);
    CHECK(model.final_grad_norm <= config.grad_tol);
  }

  SUBCASE("an added similar pair shrinks the weight") {
    auto data = points({{1.0}, {0.0}, {1.0}, {0.0}});
    PairConstraintSet constraints;
    constraints.ordered.push_back(IndexPair{0, 1});
    constraints.similar.push_back(IndexPair{2, 3});
    RankerConfig config;
    config.c = 1.0;
    RankingModel model =
        fit_ranker(data, constraints, config, EmotionCategory::kHappy);
    CHECK(std::fabs(model.w[0] - 0.4) <= 1e-6);
  }

  SUBCASE("similar-only constraints pin the weight at zero") {
    auto data = points({{1.0}, {0.0}});
    PairConstraintSet constraints;
    constraints.similar.push_back(IndexPair{0, 1});
    RankingModel model = fit_ranker(data, constraints, RankerConfig{},
                                    EmotionCategory::kHappy);
    CHECK(std::fabs(model.w[0]) <= 1e-9);
  }
}

TEST_CASE("score is the plain inner product") {
  RankingModel model;
  model.w = {1.0, 2.0};
  CHECK(score(model, std::vector<double>{3.0, 4.0}) == doctest::Approx(11.0));
  CHECK(score(model, std::vector<double>{0.0, 0.0}) == doctest::Approx(0.0));
  CHECK(contains(thrown_message([&] {
                   score(model, std::vector<double>{1.0});
                 }),
                 "does not match"));
}

TEST_CASE("fitted objective matches a gradient-descent oracle") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 50; ++trial) {
    auto instance = random_ranking_instance(rng);
    RankerConfig config;
    config.c = instance.c;
    FitReport report;
    RankingModel model = fit_ranker(instance.data, instance.constraints,
                                    config, EmotionCategory::kHappy, &report);
    double f_fit = ranking_objective(model.w, instance.data,
                                     instance.constraints, instance.c);
    double f_oracle =
        oracle_minimize(instance.data, instance.constraints, instance.c);
    CHECK(rel_gap(f_fit, f_oracle) < 1e-4);
    // Newton should never land above the slow reference minimizer by more
    // than noise.
    CHECK(f_fit <= f_oracle + 1e-6 * std::max(1.0, f_oracle));
  }
}

TEST_CASE("objective trace decreases monotonically") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    auto instance = random_ranking_instance(rng);
    RankerConfig config;
    config.c = instance.c;
    FitReport report;
    fit_ranker(instance.data, instance.constraints, config,
               EmotionCategory::kHappy, &report);
    REQUIRE(!report.objective_trace.empty());
    for (size_t k = 1; k < report.objective_trace.size(); ++k)
      CHECK(report.objective_trace[k] <= report.objective_trace[k - 1] + 1e-12);
  }
}

TEST_CASE("recovers a planted direction with hard margins") {
  std::mt19937_64 rng(7);
  auto gauss = [&rng]() {
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = double(rng() >> 11) * 0x1.0p-53;
    double u2 = double(rng() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  };
  const size_t dim = 8;
  std::vector<double> direction(dim);
  for (auto &v : direction) v = gauss();
  double norm = l2(direction);
  for (auto &v : direction) v /= norm;

  std::vector<FeatureVector> data;
  PairConstraintSet constraints;
  for (size_t k = 0; k < 10; ++k) {
    FeatureVector neutral;
    neutral.values.resize(dim);
    for (auto &v : neutral.values) v = 0.05 * gauss();
    FeatureVector emotional = neutral;
    for (size_t d = 0; d < dim; ++d) emotional.values[d] += 2.0 * direction[d];
    data.push_back(emotional);
    data.push_back(neutral);
  }
  for (size_t a = 0; a < 10; ++a)
    for (size_t b = 0; b < 10; ++b)
      constraints.ordered.push_back(IndexPair{2 * a, 2 * b + 1});

  RankerConfig config;
  config.c = 1e3;
  config.max_newton_iters = 100;
  FitReport report;
  RankingModel model = fit_ranker(data, constraints, config,
                                  EmotionCategory::kAngry, &report);
  CHECK(report.converged);

  double cosine = 0.0;
  for (size_t d = 0; d < dim; ++d) cosine += model.w[d] * direction[d];
  cosine /= l2(model.w);
  CHECK(cosine >= 0.99);

  double min_margin = 1e300;
  for (const auto &p : constraints.ordered) {
    double margin = 0.0;
    for (size_t d = 0; d < dim; ++d)
      margin += model.w[d] * (data[p.i].values[d] - data[p.j].values[d]);
    min_margin = std::min(min_margin, margin);
  }
  CHECK(min_margin >= 1.0 - 1e-2);
}

TEST_CASE("fit is invariant to the order of the pair lists") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 5; ++trial) {
    auto instance = random_ranking_instance(rng);
    RankerConfig config;
    config.c = instance.c;
    RankingModel base = fit_ranker(instance.data, instance.constraints, config,
                                   EmotionCategory::kHappy);
    auto shuffled = instance.constraints;
    std::reverse(shuffled.ordered.begin(), shuffled.ordered.end());
    std::reverse(shuffled.similar.begin(), shuffled.similar.end());
    std::mt19937_64 mix(trial);
    std::shuffle(shuffled.ordered.begin(), shuffled.ordered.end(), mix);
    std::shuffle(shuffled.similar.begin(), shuffled.similar.end(), mix);
    RankingModel again = fit_ranker(instance.data, shuffled, config,
                                    EmotionCategory::kHappy);
    REQUIRE(base.w.size() == again.w.size());
    for (size_t d = 0; d < base.w.size(); ++d)
      CHECK(std::fabs(base.w[d] - again.w[d]) < 1e-8);
  }
}

TEST_CASE("positive rescaling of the weights preserves order") {
  RankingModel one;
  one.w = {0.4, -1.2, 0.7};
  RankingModel three = one;
  for (auto &v : three.w) v *= 3.0;
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> a(3), b(3);
    for (auto &v : a) v = double(rng() % 1000) / 250.0 - 2.0;
    for (auto &v : b) v = double(rng() % 1000) / 250.0 - 2.0;
    double d1 = score(one, a) - score(one, b);
    double d3 = score(three, a) - score(three, b);
    CHECK(d1 * d3 >= 0.0);
  }
}

TEST_CASE("standardization is applied inside score and survives IO") {
  // Second dimension lives on a much larger scale.
  std::vector<FeatureVector> data;
  PairConstraintSet constraints;
  std::mt19937_64 rng(31);
  for (size_t k = 0; k < 6; ++k) {
    double noise = double(rng() % 100) / 100.0;
    data.push_back(FeatureVector{{1.0 + 0.01 * noise, 800.0 + 40.0 * noise}});
    data.push_back(FeatureVector{{0.01 * noise, 805.0 - 40.0 * noise}});
    constraints.ordered.push_back(IndexPair{2 * k, 2 * k + 1});
  }
  RankerConfig config;
  config.standardize = true;
  RankingModel model =
      fit_ranker(data, constraints, config, EmotionCategory::kFear);
  REQUIRE(model.standardization.has_value());
  REQUIRE(model.standardization->mean.size() == 2);

  std::vector<double> x = {0.7, 820.0};
  double manual = 0.0;
  for (size_t d = 0; d < 2; ++d) {
    double z = (x[d] - model.standardization->mean[d]) /
               model.standardization->stdev[d];
    manual += model.w[d] * z;
  }
  CHECK(score(model, x) == doctest::Approx(manual).epsilon(1e-12));

  model.normalization = NormalizationStats{EmotionCategory::kFear, -1.0, 2.5};
  TempDir dir;
  std::string path = dir.file("model.json");
  save_ranking_model(model, path);
  RankingModel loaded = load_ranking_model(path);
  CHECK(loaded.category == model.category);
  CHECK(loaded.w == model.w);
  CHECK(loaded.config.c == model.config.c);
  CHECK(loaded.config.standardize);
  REQUIRE(loaded.standardization.has_value());
  CHECK(loaded.standardization->mean == model.standardization->mean);
  CHECK(loaded.standardization->stdev == model.standardization->stdev);
  REQUIRE(loaded.normalization.has_value());
  CHECK(loaded.normalization->min_raw == doctest::Approx(-1.0));
  CHECK(loaded.normalization->max_raw == doctest::Approx(2.5));
  CHECK(loaded.final_objective == doctest::Approx(model.final_objective));
  CHECK(loaded.final_grad_norm == doctest::Approx(model.final_grad_norm));
  CHECK(score(loaded, x) == doctest::Approx(score(model, x)).epsilon(1e-12));
}

TEST_CASE("model loader rejects malformed files") {
  TempDir dir;
  std::string path = dir.file("model.json");

  write_file(path, "not json at all");
  CHECK(contains(thrown_message([&] { load_ranking_model(path); }),
                 "invalid JSON"));

  write_file(path, R"({"format_version": 99})");
  CHECK(contains(thrown_message([&] { load_ranking_model(path); }),
                 "unsupported format_version"));

  CHECK(contains(thrown_message([&] {
                   load_ranking_model(dir.file("missing.json"));
                 }),
                 "cannot open"));
}

TEST_CASE("fit input validation") {
  Scalar1D inst;
  CHECK(contains(thrown_message([&] {
                   fit_ranker(inst.data, PairConstraintSet{}, RankerConfig{},
                              EmotionCategory::kHappy);
                 }),
                 "empty constraints"));
  CHECK(contains(thrown_message([&] {
                   fit_ranker(std::vector<FeatureVector>{}, inst.constraints,
                              RankerConfig{}, EmotionCategory::kHappy);
                 }),
                 "no feature vectors"));
  RankerConfig bad;
  bad.c = 0.0;
  CHECK(contains(thrown_message([&] {
                   fit_ranker(inst.data, inst.constraints, bad,
                              EmotionCategory::kHappy);
                 }),
                 "C must be positive"));
  bad = RankerConfig{};
  bad.armijo_shrink = 1.0;
  CHECK(contains(thrown_message([&] {
                   fit_ranker(inst.data, inst.constraints, bad,
                              EmotionCategory::kHappy);
                 }),
                 "armijo_shrink"));

  // An exhausted iteration budget reports instead of throwing.
  RankerConfig tight;
  tight.c = 1e3;
  tight.max_newton_iters = 1;
  tight.grad_tol = 1e-12;
  FitReport report;
  std::mt19937_64 rng(8);
  auto instance = random_ranking_instance(rng);
  RankingModel model = fit_ranker(instance.data, instance.constraints, tight,
                                  EmotionCategory::kHappy, &report);
  CHECK(report.iterations <= 1);
  CHECK(report.converged == (model.final_grad_norm <= tight.grad_tol));
}
