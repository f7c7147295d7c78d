// emorank/predictor.h

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

#ifndef EMORANK_PREDICTOR_H_
#define EMORANK_PREDICTOR_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "emorank/types.h"

namespace emorank {

struct PredictorConfig {
  size_t input_dim = 0;
  size_t hidden_dim = 32;
  double learning_rate = 0.05;
  size_t epochs = 500;
  size_t batch_size = 16;
  uint64_t seed = 0;
  double alpha = 1.0;  // weight of the strength loss in the composite loss
};

void validate_config(const PredictorConfig& config);

// Per-phoneme text-side features: one-hot phoneme identity concatenated with
// one-hot left and right context ([prev | cur | next]); out-of-sequence or
// unknown phonemes encode as a zero block. input_dim = 3 * inventory size.
struct PhonemeFeaturizer {
  std::vector<std::string> inventory;  // sorted, unique
  int context = 1;

  size_t input_dim() const { return 3 * inventory.size(); }
  int index_of(const std::string& phoneme) const;
  std::vector<double> encode(std::span<const std::string> phonemes,
                             size_t position) const;
};

PhonemeFeaturizer featurizer_from_curves(std::span<const StrengthCurve> curves);

// Two fully-connected layers with a ReLU after the first:
// y = w2 . relu(W1 x + b1) + b2.
struct PredictorModel {
  EmotionCategory category = EmotionCategory::kNeutral;
  size_t input_dim = 0;
  size_t hidden_dim = 0;
  std::vector<double> w1;  // hidden_dim x input_dim, row-major
  std::vector<double> b1;  // hidden_dim
  std::vector<double> w2;  // hidden_dim (single output row)
  double b2 = 0.0;
  PhonemeFeaturizer featurizer;
};

struct TrainSample {
  std::vector<double> features;
  double target = 0.0;
};

struct PredictorGradients {
  std::vector<double> w1;
  std::vector<double> b1;
  std::vector<double> w2;
  double b2 = 0.0;
};

struct TrainTrace {
  std::vector<double> epoch_loss;  // mean L1 over the full set, per epoch
};

// Raw network output, unclamped.
double forward(const PredictorModel& model, std::span<const double> x);

// Mean absolute error over phonemes.
double l1_strength_loss(std::span<const double> pred,
                        std::span<const double> target);

// mel_loss + alpha * strength_loss.
double composite_loss(double mel_loss, double strength_loss, double alpha);

// Analytic gradients of the mean L1 loss over the batch, with subgradient 0
// at |.| kinks and at ReLU kinks.
PredictorGradients grad(const PredictorModel& model,
                        std::span<const TrainSample> batch);

// Deterministic mini-batch gradient descent: parameters start uniform in
// [-1/sqrt(fan_in), 1/sqrt(fan_in)], the per-epoch shuffle is driven by the
// seed, and the step size decays linearly to zero across epochs.
PredictorModel train_predictor(std::span<const TrainSample> data,
                               const PredictorConfig& config,
                               PhonemeFeaturizer featurizer,
                               EmotionCategory category,
                               TrainTrace* trace = nullptr);

// Forward pass per phoneme, clamped to [0,1].
StrengthCurve predict_curve(const PredictorModel& model,
                            std::span<const std::string> phonemes,
                            const std::string& utterance_id);

// Builds (features, target) pairs from strength curves.
std::vector<TrainSample> curve_training_samples(
    const PhonemeFeaturizer& featurizer, std::span<const StrengthCurve> curves);

void save_predictor_model(const PredictorModel& model, const std::string& path);
PredictorModel load_predictor_model(const std::string& path);

void write_loss_trace_csv(const std::string& path, const TrainTrace& trace);

}  // namespace emorank

#endif  // EMORANK_PREDICTOR_H_
