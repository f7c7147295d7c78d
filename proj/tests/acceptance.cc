// tests/acceptance.cc

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

// Release gate. Each check prints exactly one [PASS]/[FAIL] line; the binary
// exits nonzero if anything failed. Tolerances and time budgets are fixed
// here on purpose: loosening them is a visible diff.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "emorank/constraints.h"
#include "emorank/dataset_io.h"
#include "emorank/eval.h"
#include "emorank/predictor.h"
#include "emorank/ranker.h"
#include "emorank/strength.h"
#include "emorank/types.h"
#include "oracles.h"
#include "test_util.h"

using namespace emorank;
using emorank_test::CliResult;
using emorank_test::TempDir;
using emorank_test::enumerate_paths;
using emorank_test::fd_gradient;
using emorank_test::oracle_min_dtw_cost;
using emorank_test::oracle_minimize;
using emorank_test::oracle_objective;
using emorank_test::oracle_path_cost;
using emorank_test::oracle_path_mcd;
using emorank_test::random_ranking_instance;
using emorank_test::read_file;
using emorank_test::run_process;

namespace {

struct Criterion {
  std::string name;
  bool pass = true;
  std::vector<std::string> notes;
  double seconds = 0.0;
};

void fail(Criterion &c, const std::string &why) {
  c.pass = false;
  c.notes.push_back(why);
}

void expect(Criterion &c, bool ok, const std::string &why) {
  if (!ok) fail(c, why);
}

using CheckFn = std::function<void(Criterion &)>;

Criterion run_criterion(const std::string &name, double budget_s,
                        const CheckFn &fn) {
  Criterion c;
  c.name = name;
  auto start = std::chrono::steady_clock::now();
  try {
    fn(c);
  } catch (const std::exception &e) {
    fail(c, std::string("exception: ") + e.what());
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  if (budget_s > 0.0 && c.seconds > budget_s) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "took %.2fs, budget %.0fs", c.seconds,
                  budget_s);
    fail(c, buf);
  }
  std::printf("[%s] %s (%.2fs)\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
              c.seconds);
  for (const std::string &note : c.notes)
    std::printf("       - %s\n", note.c_str());
  std::fflush(stdout);
  return c;
}

std::vector<FeatureVector> points(const std::vector<std::vector<double>> &raw) {
  std::vector<FeatureVector> data;
  for (const auto &values : raw) data.push_back(FeatureVector{values});
  return data;
}

double l2(const std::vector<double> &v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

// ---------------------------------------------------------------------------
// 1. Single-pair problems match their closed forms.

void check_closed_form(Criterion &c) {
  for (double cval : {0.1, 1.0, 10.0}) {
    RankerConfig config;
    config.c = cval;

    PairConstraintSet single;
    single.ordered.push_back(IndexPair{0, 1});
    RankingModel model = fit_ranker(points({{1.0}, {0.0}}), single, config,
                                    EmotionCategory::kHappy);
    double want = 2.0 * cval / (1.0 + 2.0 * cval);
    expect(c, std::fabs(model.w[0] - want) <= 1e-6,
           "single ordered pair at C=" + std::to_string(cval));

    PairConstraintSet mixed;
    mixed.ordered.push_back(IndexPair{0, 1});
    mixed.similar.push_back(IndexPair{2, 3});
    RankingModel mixed_model =
        fit_ranker(points({{1.0}, {0.0}, {1.0}, {0.0}}), mixed, config,
                   EmotionCategory::kHappy);
    double want_mixed = 2.0 * cval / (1.0 + 4.0 * cval);
    expect(c, std::fabs(mixed_model.w[0] - want_mixed) <= 1e-6,
           "ordered+similar pair at C=" + std::to_string(cval));
  }
}

// ---------------------------------------------------------------------------
// 2. Random instances: objective matches a slow independent minimizer and
// the analytic gradient matches central differences.

void check_oracle_match(Criterion &c) {
  std::mt19937_64 rng(20260814);
  int fitted = 0, graded = 0;
  while (fitted < 50 || graded < 50) {
    auto instance = random_ranking_instance(rng);
    size_t dim = instance.data.front().dim();

    if (fitted < 50) {
      RankerConfig config;
      config.c = instance.c;
      RankingModel model = fit_ranker(instance.data, instance.constraints,
                                      config, EmotionCategory::kHappy);
      double f_fit = ranking_objective(model.w, instance.data,
                                       instance.constraints, instance.c);
      double f_ref =
          oracle_minimize(instance.data, instance.constraints, instance.c);
      double gap = std::fabs(f_fit - f_ref) / std::max(1.0, std::fabs(f_ref));
      expect(c, gap <= 1e-4,
             "objective gap " + std::to_string(gap) + " on instance " +
                 std::to_string(fitted));
      ++fitted;
    }

    if (graded < 50) {
      std::vector<double> w(dim);
      for (auto &v : w) v = (double(rng() % 2000) - 1000.0) / 900.0;
      bool near_kink = false;
      for (const auto &p : instance.constraints.ordered) {
        double resp = emorank_test::oracle_pair_response(
            w, instance.data[p.i], instance.data[p.j]);
        if (std::fabs(1.0 - resp) < 1e-3) near_kink = true;
      }
      if (!near_kink) {
        std::vector<double> g = ranking_gradient(
            w, instance.data, instance.constraints, instance.c);
        std::vector<double> g_fd = fd_gradient(
            [&](const std::vector<double> &p) {
              return oracle_objective(p, instance.data, instance.constraints,
                                      instance.c);
            },
            w, 1e-6);
        double diff = 0.0;
        for (size_t d = 0; d < dim; ++d)
          diff = std::max(diff, std::fabs(g[d] - g_fd[d]));
        expect(c, diff / std::max(1.0, l2(g_fd)) <= 1e-5,
               "gradient mismatch " + std::to_string(diff));
        ++graded;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 3. Separable pairs: the planted direction is recovered with hard margins.

void check_margin_recovery(Criterion &c) {
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
  expect(c, report.converged, "Newton did not converge");

  double cosine = 0.0;
  for (size_t d = 0; d < dim; ++d) cosine += model.w[d] * direction[d];
  cosine /= l2(model.w);
  expect(c, cosine >= 0.99, "cosine to planted direction " +
                                std::to_string(cosine));

  double min_margin = 1e300;
  for (const auto &p : constraints.ordered) {
    double margin = 0.0;
    for (size_t d = 0; d < dim; ++d)
      margin += model.w[d] * (data[p.i].values[d] - data[p.j].values[d]);
    min_margin = std::min(min_margin, margin);
  }
  expect(c, min_margin >= 1.0 - 1e-2,
         "min margin " + std::to_string(min_margin));
}

// ---------------------------------------------------------------------------
// 4. Normalization reaches both endpoints; resampling behaves on the pinned
// cases and is exact at equal lengths.

void check_strength_pipeline(Criterion &c) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> raw(2 + rng() % 20);
    for (auto &v : raw) v = double(rng() % 10000) / 50.0 - 100.0;
    NormalizationStats stats = fit_normalization(raw, EmotionCategory::kHappy);
    std::vector<double> normalized = normalize(raw, stats);
    double lo = 2.0, hi = -1.0;
    for (double v : normalized) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      expect(c, v >= 0.0 && v <= 1.0, "normalized value escaped [0,1]");
    }
    bool constant = stats.min_raw == stats.max_raw;
    if (constant) {
      expect(c, lo == 0.5 && hi == 0.5, "degenerate stats must map to 0.5");
    } else {
      expect(c, lo == 0.0, "minimum did not map to 0");
      expect(c, hi == 1.0, "maximum did not map to 1");
    }
  }

  std::vector<double> resampled =
      resample_curve(std::vector<double>{0.0, 1.0, 0.0}, 5);
  std::vector<double> want = {0.0, 0.5, 1.0, 0.5, 0.0};
  expect(c, resampled == want, "tent curve resampled to 5 samples");

  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> curve(1 + rng() % 15);
    for (auto &v : curve) v = double(rng() % 1000) / 999.0;
    expect(c, resample_curve(curve, curve.size()) == curve,
           "equal-length resample must copy exactly");
  }
}

// ---------------------------------------------------------------------------
// 5. Predictor: analytic gradients match finite differences away from kinks,
// a small corpus is overfit below 0.01 L1, and predictions stay in [0,1].

void check_predictor(Criterion &c) {
  std::mt19937_64 rng(606);

  auto loss_of = [](const PredictorModel &m,
                    const std::vector<TrainSample> &batch) {
    double total = 0.0;
    for (const auto &s : batch)
      total += std::fabs(forward(m, s.features) - s.target);
    return total / batch.size();
  };

  int checked = 0;
  while (checked < 20) {
    size_t input_dim = 1 + rng() % 4;
    size_t hidden_dim = 1 + rng() % 4;
    PredictorModel model;
    model.input_dim = input_dim;
    model.hidden_dim = hidden_dim;
    model.w1.resize(hidden_dim * input_dim);
    model.b1.resize(hidden_dim);
    model.w2.resize(hidden_dim);
    auto fill = [&rng](std::vector<double> &v) {
      for (auto &x : v) x = (double(rng() % 2001) - 1000.0) / 700.0;
    };
    fill(model.w1);
    fill(model.b1);
    fill(model.w2);
    model.b2 = (double(rng() % 2001) - 1000.0) / 700.0;

    std::vector<TrainSample> batch(1 + rng() % 3);
    for (auto &sample : batch) {
      sample.features.resize(input_dim);
      for (auto &x : sample.features) x = (double(rng() % 2001) - 1000.0) / 700.0;
      sample.target = double(rng() % 1001) / 1000.0;
    }

    bool near_kink = false;
    for (const auto &sample : batch) {
      if (std::fabs(forward(model, sample.features) - sample.target) < 1e-4)
        near_kink = true;
      for (size_t h = 0; h < hidden_dim; ++h) {
        double pre = model.b1[h];
        for (size_t d = 0; d < input_dim; ++d)
          pre += model.w1[h * input_dim + d] * sample.features[d];
        if (std::fabs(pre) < 1e-4) near_kink = true;
      }
    }
    if (near_kink) continue;

    PredictorGradients g = grad(model, batch);
    std::vector<double *> params;
    std::vector<double> analytic;
    for (size_t k = 0; k < model.w1.size(); ++k) {
      params.push_back(&model.w1[k]);
      analytic.push_back(g.w1[k]);
    }
    for (size_t k = 0; k < model.b1.size(); ++k) {
      params.push_back(&model.b1[k]);
      analytic.push_back(g.b1[k]);
    }
    for (size_t k = 0; k < model.w2.size(); ++k) {
      params.push_back(&model.w2[k]);
      analytic.push_back(g.w2[k]);
    }
    params.push_back(&model.b2);
    analytic.push_back(g.b2);

    const double h = 1e-5;
    double max_diff = 0.0, scale = 1.0;
    for (size_t k = 0; k < params.size(); ++k) {
      double saved = *params[k];
      *params[k] = saved + h;
      double up = loss_of(model, batch);
      *params[k] = saved - h;
      double down = loss_of(model, batch);
      *params[k] = saved;
      double fd = (up - down) / (2.0 * h);
      max_diff = std::max(max_diff, std::fabs(fd - analytic[k]));
      scale = std::max(scale, std::fabs(fd));
    }
    expect(c, max_diff / scale < 1e-4,
           "gradient check " + std::to_string(checked) + ": diff " +
               std::to_string(max_diff / scale));
    ++checked;
  }

  // Overfit 50 samples whose targets are a function of phoneme identity.
  std::vector<std::string> inventory;
  for (int k = 0; k < 10; ++k) inventory.push_back("ph" + std::to_string(k));
  std::vector<StrengthCurve> curves;
  size_t total = 0;
  size_t utterance = 0;
  std::mt19937_64 gen(33);
  while (total < 50) {
    StrengthCurve curve;
    curve.utterance_id = "toy_" + std::to_string(utterance++);
    curve.category = EmotionCategory::kHappy;
    size_t len = std::min<size_t>(5, 50 - total);
    for (size_t k = 0; k < len; ++k) {
      size_t idx = gen() % inventory.size();
      curve.phoneme_labels.push_back(inventory[idx]);
      curve.strengths.push_back(double(idx) / 9.0);
    }
    total += len;
    curves.push_back(curve);
  }
  PhonemeFeaturizer featurizer = featurizer_from_curves(curves);
  std::vector<TrainSample> samples = curve_training_samples(featurizer, curves);
  expect(c, samples.size() == 50, "toy corpus size");

  PredictorConfig config;
  config.input_dim = featurizer.input_dim();
  config.hidden_dim = 32;
  config.epochs = 2000;
  config.seed = 1;
  TrainTrace trace;
  PredictorModel model = train_predictor(samples, config, featurizer,
                                         EmotionCategory::kHappy, &trace);
  expect(c, trace.epoch_loss.back() < 0.01,
         "toy overfit final L1 " + std::to_string(trace.epoch_loss.back()));

  PredictorModel hot = model;
  hot.b2 += 100.0;
  StrengthCurve clamped =
      predict_curve(hot, curves[0].phoneme_labels, "clamp");
  for (double s : clamped.strengths)
    expect(c, s == 1.0, "prediction failed to clamp at 1");
  PredictorModel cold = model;
  cold.b2 -= 100.0;
  StrengthCurve floored =
      predict_curve(cold, curves[0].phoneme_labels, "clamp");
  for (double s : floored.strengths)
    expect(c, s == 0.0, "prediction failed to clamp at 0");
}

// ---------------------------------------------------------------------------
// 6. DTW equals exhaustive search; MCD constant and duplicate-frame identity.

void check_eval(Criterion &c) {
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 100; ++trial) {
    size_t dim = 2 + rng() % 3;
    FrameSequence a, b;
    a.dim = b.dim = dim;
    a.values.resize((1 + rng() % 5) * dim);
    b.values.resize((1 + rng() % 5) * dim);
    for (auto &v : a.values) v = (double(rng() % 2001) - 1000.0) / 250.0;
    for (auto &v : b.values) v = (double(rng() % 2001) - 1000.0) / 250.0;

    DtwResult result = dtw(a, b);
    double best = oracle_min_dtw_cost(a, b, LocalCost::kEuclidean);
    expect(c, std::fabs(result.total_cost - best) <= 1e-9 * std::max(1.0, best),
           "DTW cost differs from exhaustive search on trial " +
               std::to_string(trial));

    double got = evaluate_mcd(a, b);
    bool matched = false;
    for (const auto &path : enumerate_paths(a.size(), b.size())) {
      if (oracle_path_cost(a, b, path, LocalCost::kEuclidean) > best + 1e-9)
        continue;
      if (std::fabs(oracle_path_mcd(a, b, path, true) - got) < 1e-9)
        matched = true;
    }
    expect(c, matched, "MCD does not come from a cost-minimal path on trial " +
                           std::to_string(trial));
  }

  // Unit difference in one counted coefficient.
  FrameSequence x, y;
  x.dim = y.dim = 2;
  x.values = {5.0, 1.0};
  y.values = {5.0, 0.0};
  AlignmentPath lone;
  lone.pairs = {{0, 0}};
  expect(c, std::fabs(mcd(x, y, lone) - 6.14185) <= 1e-4,
         "dB constant off: " + std::to_string(mcd(x, y, lone)));

  // A duplicated frame aligns for free.
  FrameSequence base;
  base.dim = 3;
  base.values = {0.1, 0.2, 0.3, 4.0, 5.0, 6.0, -1.0, -2.0, -3.0};
  FrameSequence dup;
  dup.dim = 3;
  for (size_t k = 0; k < base.size(); ++k) {
    auto frame = base.frame(k);
    dup.values.insert(dup.values.end(), frame.begin(), frame.end());
    if (k == 1) dup.values.insert(dup.values.end(), frame.begin(), frame.end());
  }
  expect(c, evaluate_mcd(base, dup) == 0.0,
         "duplicated frame must evaluate to exactly 0");
}

// ---------------------------------------------------------------------------
// 7. Full CLI chain: runs twice, byte-identical, holdout L1 within 0.1.

struct ChainOutputs {
  std::map<std::string, std::string> files;  // name -> content
  std::string evaluate_stdout;
};

ChainOutputs run_chain(Criterion &c, const std::string &root) {
  auto cli = [&](const std::vector<std::string> &args) {
    CliResult result = run_process(EMORANK_CLI_PATH, args);
    if (result.exit_code != 0) {
      throw std::runtime_error("cli failed (" +
                               std::to_string(result.exit_code) +
                               "): " + result.err);
    }
    return result;
  };

  cli({"--seed", "1", "--out-dir", root, "gen-fixtures"});
  cli({"--seed", "1", "train-ranker",
       "--features", root + "/train_features.jsonl",
       "--alignments", root + "/train_alignments.csv",
       "--category", "happy",
       "--out", root + "/ranker_happy.json"});
  cli({"extract",
       "--model", root + "/ranker_happy.json",
       "--features", root + "/train_features.jsonl",
       "--alignments", root + "/train_alignments.csv",
       "--out", root + "/train_curves.csv"});
  cli({"extract",
       "--model", root + "/ranker_happy.json",
       "--features", root + "/holdout_features.jsonl",
       "--alignments", root + "/holdout_alignments.csv",
       "--out", root + "/holdout_curves.csv"});
  cli({"transfer",
       "--model", root + "/ranker_happy.json",
       "--reference-features", root + "/holdout_features.jsonl",
       "--reference-alignments", root + "/holdout_alignments.csv",
       "--reference-id", "happy_holdout_0000",
       "--target-phonemes", "8",
       "--out", root + "/transfer.csv"});
  cli({"--seed", "1", "train-predictor",
       "--curves", root + "/train_curves.csv",
       "--category", "happy",
       "--trace", root + "/trace.csv",
       "--out", root + "/predictor_happy.json"});
  cli({"predict",
       "--model", root + "/predictor_happy.json",
       "--alignments", root + "/holdout_alignments.csv",
       "--out", root + "/pred_curves.csv"});
  CliResult evaluated = cli({"evaluate",
                             "--pred", root + "/eval_pred.csv",
                             "--target", root + "/eval_target.csv"});

  ChainOutputs outputs;
  outputs.evaluate_stdout = evaluated.out;
  for (const char *name :
       {"train_features.jsonl", "train_alignments.csv",
        "holdout_features.jsonl", "holdout_alignments.csv", "eval_pred.csv",
        "eval_target.csv", "ranker_happy.json", "train_curves.csv",
        "holdout_curves.csv", "transfer.csv", "trace.csv",
        "predictor_happy.json", "pred_curves.csv"}) {
    outputs.files[name] = read_file(root + "/" + name);
  }
  expect(c, !outputs.evaluate_stdout.empty(), "evaluate printed nothing");
  return outputs;
}

void check_end_to_end(Criterion &c) {
  TempDir work;
  ChainOutputs first = run_chain(c, work.file("run1"));
  ChainOutputs second = run_chain(c, work.file("run2"));

  for (const auto &[name, content] : first.files) {
    if (second.files.at(name) != content)
      fail(c, "rerun changed " + name);
  }
  expect(c, first.evaluate_stdout == second.evaluate_stdout,
         "rerun changed the evaluate output");

  // Holdout accuracy: predicted curves against extracted ground truth.
  std::vector<StrengthCurve> predicted = load_curves_csv(
      work.file("run1") + "/pred_curves.csv", EmotionCategory::kHappy);
  std::vector<StrengthCurve> truth = load_curves_csv(
      work.file("run1") + "/holdout_curves.csv", EmotionCategory::kHappy);
  std::map<std::string, const StrengthCurve *> by_id;
  for (const auto &curve : predicted) by_id[curve.utterance_id] = &curve;

  double total = 0.0;
  size_t count = 0;
  for (const auto &gt : truth) {
    auto it = by_id.find(gt.utterance_id);
    if (it == by_id.end()) {
      fail(c, "no prediction for " + gt.utterance_id);
      continue;
    }
    const StrengthCurve &pred = *it->second;
    if (pred.strengths.size() != gt.strengths.size()) {
      fail(c, "phoneme count mismatch for " + gt.utterance_id);
      continue;
    }
    for (size_t k = 0; k < gt.strengths.size(); ++k) {
      total += std::fabs(pred.strengths[k] - gt.strengths[k]);
      ++count;
    }
  }
  expect(c, count > 0, "no holdout phonemes compared");
  double mean_l1 = count ? total / double(count) : 1.0;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "holdout L1 %.4f over %zu phonemes (cap 0.1)",
                mean_l1, count);
  c.notes.push_back(buf);
  expect(c, mean_l1 <= 0.1, "holdout L1 above 0.1");
}

}  // namespace

int main() {
  int failures = 0;
  auto tally = [&failures](const Criterion &c) {
    if (!c.pass) ++failures;
  };

  tally(run_criterion("ranker closed-form solutions", 1.0, check_closed_form));
  tally(run_criterion("ranker matches slow oracle on random instances", 30.0,
                      check_oracle_match));
  tally(run_criterion("ranker recovers planted direction with margins", 10.0,
                      check_margin_recovery));
  tally(run_criterion("normalization endpoints and resampling identities", 0.0,
                      check_strength_pipeline));
  tally(run_criterion("predictor gradients, overfit and clamping", 60.0,
                      check_predictor));
  tally(run_criterion("DTW/MCD against exhaustive enumeration", 0.0,
                      check_eval));
  tally(run_criterion("CLI end-to-end: deterministic and accurate", 120.0,
                      check_end_to_end));

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
