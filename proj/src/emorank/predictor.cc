// emorank/predictor.cc

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

#include "emorank/predictor.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>

#include "json.hpp"

#include "emorank/util.h"

namespace emorank {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void check_input_dim(size_t got, size_t want) {
  if (got != want) {
    throw Error(StatusCode::kDimMismatch,
                "predictor input dim " + std::to_string(got) +
                    " does not match model input dim " + std::to_string(want));
  }
}

double sign_of(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// Hidden pre-activations a = W1 x + b1.
void hidden_preactivations(const PredictorModel& model,
                           std::span<const double> x, std::vector<double>& a) {
  a.assign(model.hidden_dim, 0.0);
  for (size_t h = 0; h < model.hidden_dim; ++h) {
    const double* row = model.w1.data() + h * model.input_dim;
    double acc = model.b1[h];
    for (size_t d = 0; d < model.input_dim; ++d) acc += row[d] * x[d];
    a[h] = acc;
  }
}

}  // namespace

void validate_config(const PredictorConfig& config) {
  auto fail = [](const std::string& what) {
    throw Error(StatusCode::kInvalidArgument, "bad predictor config: " + what);
  };
  if (config.input_dim == 0) fail("input_dim must be positive");
  if (config.hidden_dim == 0) fail("hidden_dim must be positive");
  if (!(config.learning_rate > 0.0)) fail("learning_rate must be positive");
  if (config.epochs == 0) fail("epochs must be positive");
  if (config.batch_size == 0) fail("batch_size must be positive");
  if (!(config.alpha >= 0.0)) fail("alpha must be nonnegative");
}

int PhonemeFeaturizer::index_of(const std::string& phoneme) const {
  auto it = std::lower_bound(inventory.begin(), inventory.end(), phoneme);
  if (it == inventory.end() || *it != phoneme) return -1;
  return static_cast<int>(it - inventory.begin());
}

std::vector<double> PhonemeFeaturizer::encode(
    std::span<const std::string> phonemes, size_t position) const {
  if (position >= phonemes.size()) {
    throw Error(StatusCode::kInvalidArgument,
                "phoneme position out of range");
  }
  const size_t v = inventory.size();
  std::vector<double> features(3 * v, 0.0);
  auto set_block = [&](size_t block, long pos) {
    if (pos < 0 || pos >= static_cast<long>(phonemes.size())) return;
    int idx = index_of(phonemes[static_cast<size_t>(pos)]);
    if (idx >= 0) features[block * v + static_cast<size_t>(idx)] = 1.0;
  };
  set_block(0, static_cast<long>(position) - 1);
  set_block(1, static_cast<long>(position));
  set_block(2, static_cast<long>(position) + 1);
  return features;
}

PhonemeFeaturizer featurizer_from_curves(
    std::span<const StrengthCurve> curves) {
  std::set<std::string> labels;
  for (const StrengthCurve& curve : curves) {
    labels.insert(curve.phoneme_labels.begin(), curve.phoneme_labels.end());
  }
  if (labels.empty()) {
    throw Error(StatusCode::kInvalidArgument,
                "cannot build a featurizer from empty curves");
  }
  PhonemeFeaturizer featurizer;
  featurizer.inventory.assign(labels.begin(), labels.end());
  return featurizer;
}

double forward(const PredictorModel& model, std::span<const double> x) {
  check_input_dim(x.size(), model.input_dim);
  std::vector<double> a;
  hidden_preactivations(model, x, a);
  double y = model.b2;
  for (size_t h = 0; h < model.hidden_dim; ++h) {
    if (a[h] > 0.0) y += model.w2[h] * a[h];
  }
  return y;
}

double l1_strength_loss(std::span<const double> pred,
                        std::span<const double> target) {
  if (pred.size() != target.size()) {
    throw Error(StatusCode::kInvalidArgument,
                "l1 loss: length mismatch (" + std::to_string(pred.size()) +
                    " vs " + std::to_string(target.size()) + ")");
  }
  if (pred.empty()) {
    throw Error(StatusCode::kInvalidArgument, "l1 loss: empty input");
  }
  double acc = 0.0;
  for (size_t k = 0; k < pred.size(); ++k) acc += std::abs(pred[k] - target[k]);
  return acc / static_cast<double>(pred.size());
}

double composite_loss(double mel_loss, double strength_loss, double alpha) {
  if (!(mel_loss >= 0.0) || !(strength_loss >= 0.0) || !(alpha >= 0.0)) {
    throw Error(StatusCode::kInvalidArgument,
                "composite loss inputs must be nonnegative");
  }
  return mel_loss + alpha * strength_loss;
}

PredictorGradients grad(const PredictorModel& model,
                        std::span<const TrainSample> batch) {
  if (batch.empty()) {
    throw Error(StatusCode::kInvalidArgument, "gradient over empty batch");
  }
  PredictorGradients g;
  g.w1.assign(model.w1.size(), 0.0);
  g.b1.assign(model.b1.size(), 0.0);
  g.w2.assign(model.w2.size(), 0.0);
  g.b2 = 0.0;

  const double inv_batch = 1.0 / static_cast<double>(batch.size());
  std::vector<double> a;
  for (const TrainSample& sample : batch) {
    check_input_dim(sample.features.size(), model.input_dim);
    hidden_preactivations(model, sample.features, a);
    double y = model.b2;
    for (size_t h = 0; h < model.hidden_dim; ++h) {
      if (a[h] > 0.0) y += model.w2[h] * a[h];
    }
    const double dy = sign_of(y - sample.target) * inv_batch;
    if (dy == 0.0) continue;
    g.b2 += dy;
    for (size_t h = 0; h < model.hidden_dim; ++h) {
      if (a[h] <= 0.0) continue;  // ReLU gate; subgradient 0 at the kink
      g.w2[h] += dy * a[h];
      const double da = dy * model.w2[h];
      g.b1[h] += da;
      double* row = g.w1.data() + h * model.input_dim;
      for (size_t d = 0; d < model.input_dim; ++d) {
        row[d] += da * sample.features[d];
      }
    }
  }
  return g;
}

PredictorModel train_predictor(std::span<const TrainSample> data,
                               const PredictorConfig& config,
                               PhonemeFeaturizer featurizer,
                               EmotionCategory category, TrainTrace* trace) {
  validate_config(config);
  if (data.empty()) {
    throw Error(StatusCode::kInvalidArgument, "no training samples");
  }
  for (const TrainSample& sample : data) {
    if (sample.features.size() != config.input_dim) {
      throw Error(StatusCode::kDimMismatch,
                  "training sample dim " +
                      std::to_string(sample.features.size()) +
                      " does not match input_dim " +
                      std::to_string(config.input_dim));
    }
    if (!(sample.target >= 0.0 && sample.target <= 1.0)) {
      throw Error(StatusCode::kInvalidArgument,
                  "training target out of [0,1]");
    }
  }

  PredictorModel model;
  model.category = category;
  model.input_dim = config.input_dim;
  model.hidden_dim = config.hidden_dim;
  model.featurizer = std::move(featurizer);
  model.w1.resize(config.hidden_dim * config.input_dim);
  model.b1.resize(config.hidden_dim);
  model.w2.resize(config.hidden_dim);

  std::mt19937_64 rng(config.seed);
  const double r1 = 1.0 / std::sqrt(static_cast<double>(config.input_dim));
  const double r2 = 1.0 / std::sqrt(static_cast<double>(config.hidden_dim));
  for (double& v : model.w1) v = uniform_range(rng, -r1, r1);
  for (double& v : model.b1) v = uniform_range(rng, -r1, r1);
  for (double& v : model.w2) v = uniform_range(rng, -r2, r2);
  model.b2 = uniform_range(rng, -r2, r2);

  std::vector<size_t> order(data.size());
  for (size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::vector<TrainSample> batch;

  TrainTrace local_trace;
  TrainTrace& tr = trace ? *trace : local_trace;
  tr.epoch_loss.clear();
  tr.epoch_loss.reserve(config.epochs);

  for (size_t epoch = 0; epoch < config.epochs; ++epoch) {
    // Linear step decay: plain subgradient steps need a vanishing step size
    // to settle under the L1 loss.
    const double lr = config.learning_rate *
                      (1.0 - static_cast<double>(epoch) /
                                 static_cast<double>(config.epochs));
    seeded_shuffle(order, rng);
    for (size_t start = 0; start < order.size(); start += config.batch_size) {
      const size_t stop = std::min(order.size(), start + config.batch_size);
      batch.clear();
      for (size_t k = start; k < stop; ++k) batch.push_back(data[order[k]]);
      PredictorGradients g = grad(model, batch);
      for (size_t k = 0; k < model.w1.size(); ++k) model.w1[k] -= lr * g.w1[k];
      for (size_t k = 0; k < model.b1.size(); ++k) model.b1[k] -= lr * g.b1[k];
      for (size_t k = 0; k < model.w2.size(); ++k) model.w2[k] -= lr * g.w2[k];
      model.b2 -= lr * g.b2;
    }
    double loss = 0.0;
    for (const TrainSample& sample : data) {
      loss += std::abs(forward(model, sample.features) - sample.target);
    }
    loss /= static_cast<double>(data.size());
    if (!std::isfinite(loss)) {
      throw Error(StatusCode::kInternal,
                  "non-finite loss at epoch " + std::to_string(epoch));
    }
    tr.epoch_loss.push_back(loss);
  }
  return model;
}

StrengthCurve predict_curve(const PredictorModel& model,
                            std::span<const std::string> phonemes,
                            const std::string& utterance_id) {
  StrengthCurve curve;
  curve.utterance_id = utterance_id;
  curve.category = model.category;
  curve.phoneme_labels.assign(phonemes.begin(), phonemes.end());
  curve.strengths.reserve(phonemes.size());
  for (size_t k = 0; k < phonemes.size(); ++k) {
    std::vector<double> x = model.featurizer.encode(phonemes, k);
    curve.strengths.push_back(std::clamp(forward(model, x), 0.0, 1.0));
  }
  return curve;
}

std::vector<TrainSample> curve_training_samples(
    const PhonemeFeaturizer& featurizer,
    std::span<const StrengthCurve> curves) {
  std::vector<TrainSample> samples;
  for (const StrengthCurve& curve : curves) {
    validate_curve(curve);
    for (size_t k = 0; k < curve.phoneme_labels.size(); ++k) {
      samples.push_back(TrainSample{
          featurizer.encode(curve.phoneme_labels, k), curve.strengths[k]});
    }
  }
  if (samples.empty()) {
    throw Error(StatusCode::kInvalidArgument, "curves contain no phonemes");
  }
  return samples;
}

void save_predictor_model(const PredictorModel& model,
                          const std::string& path) {
  ordered_json object;
  object["format_version"] = 1;
  object["category"] = category_name(model.category);
  object["input_dim"] = model.input_dim;
  object["hidden_dim"] = model.hidden_dim;
  ordered_json w1 = ordered_json::array();
  for (size_t h = 0; h < model.hidden_dim; ++h) {
    w1.push_back(std::vector<double>(
        model.w1.begin() + static_cast<long>(h * model.input_dim),
        model.w1.begin() + static_cast<long>((h + 1) * model.input_dim)));
  }
  object["W1"] = std::move(w1);
  object["b1"] = model.b1;
  object["W2"] = ordered_json::array({model.w2});
  object["b2"] = model.b2;
  object["featurizer"] = {{"inventory", model.featurizer.inventory},
                          {"context", model.featurizer.context}};
  std::ofstream out(path);
  if (!out) {
    throw Error(StatusCode::kIoError, "cannot open '" + path + "' for writing");
  }
  out << object.dump(2) << "\n";
}

PredictorModel load_predictor_model(const std::string& path) {
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
    PredictorModel model;
    model.category = parse_category(object.at("category").get<std::string>());
    model.input_dim = object.at("input_dim").get<size_t>();
    model.hidden_dim = object.at("hidden_dim").get<size_t>();
    model.featurizer.inventory =
        object.at("featurizer").at("inventory").get<std::vector<std::string>>();
    model.featurizer.context = object.at("featurizer").at("context").get<int>();
    if (model.featurizer.context != 1) {
      throw Error(StatusCode::kParseError,
                  path + ": unsupported featurizer context");
    }
    if (!std::is_sorted(model.featurizer.inventory.begin(),
                        model.featurizer.inventory.end()) ||
        model.featurizer.input_dim() != model.input_dim) {
      throw Error(StatusCode::kParseError,
                  path + ": featurizer inventory does not match input_dim");
    }
    const auto& w1 = object.at("W1");
    if (w1.size() != model.hidden_dim) {
      throw Error(StatusCode::kParseError, path + ": W1 row count mismatch");
    }
    for (const auto& row : w1) {
      auto values = row.get<std::vector<double>>();
      if (values.size() != model.input_dim) {
        throw Error(StatusCode::kParseError, path + ": W1 column count mismatch");
      }
      model.w1.insert(model.w1.end(), values.begin(), values.end());
    }
    model.b1 = object.at("b1").get<std::vector<double>>();
    const auto& w2 = object.at("W2");
    if (w2.size() != 1) {
      throw Error(StatusCode::kParseError, path + ": W2 must have one row");
    }
    model.w2 = w2[0].get<std::vector<double>>();
    model.b2 = object.at("b2").get<double>();
    if (model.b1.size() != model.hidden_dim ||
        model.w2.size() != model.hidden_dim) {
      throw Error(StatusCode::kParseError, path + ": parameter shape mismatch");
    }
    for (const auto* params : {&model.w1, &model.b1, &model.w2}) {
      for (double v : *params) {
        if (!std::isfinite(v)) {
          throw Error(StatusCode::kParseError, path + ": non-finite parameter");
        }
      }
    }
    if (!std::isfinite(model.b2)) {
      throw Error(StatusCode::kParseError, path + ": non-finite parameter");
    }
    return model;
  } catch (const json::exception& e) {
    throw Error(StatusCode::kParseError,
                path + ": bad model JSON: " + std::string(e.what()));
  }
}

void write_loss_trace_csv(const std::string& path, const TrainTrace& trace) {
  std::ofstream out(path);
  if (!out) {
    throw Error(StatusCode::kIoError, "cannot open '" + path + "' for writing");
  }
  out << "epoch,loss\n";
  for (size_t epoch = 0; epoch < trace.epoch_loss.size(); ++epoch) {
    out << epoch << ',' << format_double(trace.epoch_loss[epoch]) << "\n";
  }
}

}  // namespace emorank
