// emorank/fixtures.cc

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

#include "emorank/fixtures.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <random>
#include <vector>

#include "emorank/dataset_io.h"
#include "emorank/eval.h"
#include "emorank/types.h"
#include "emorank/util.h"

namespace emorank {

namespace {

constexpr std::array<const char*, 20> kInventory = {
    "aa", "ae", "ah", "ao", "aw", "ay", "b",  "d",  "eh", "er",
    "ey", "f",  "g",  "ih", "iy", "k",  "ow", "oy", "uh", "uw"};

// Planted per-phoneme strength: evenly spaced over [0,1] by inventory index.
double phoneme_strength(size_t index) {
  return static_cast<double>(index) /
         static_cast<double>(kInventory.size() - 1);
}

void validate_fixture_config(const FixtureConfig& config) {
  if (config.out_dir.empty()) {
    throw Error(StatusCode::kInvalidArgument, "out_dir must not be empty");
  }
  if (config.dim < 2) {
    throw Error(StatusCode::kInvalidArgument, "dim must be at least 2");
  }
  if (config.n_train < 2 || config.n_holdout < 1) {
    throw Error(StatusCode::kInvalidArgument,
                "need at least 2 train and 1 holdout utterances per category");
  }
  if (config.min_phonemes < 1 || config.max_phonemes < config.min_phonemes) {
    throw Error(StatusCode::kInvalidArgument, "bad phoneme count range");
  }
  if (!(config.separation > 0.0) || !(config.noise >= 0.0)) {
    throw Error(StatusCode::kInvalidArgument,
                "separation must be positive and noise non-negative");
  }
  if (config.eval_frames < 2 || config.eval_dim < 2) {
    throw Error(StatusCode::kInvalidArgument,
                "eval sequences need at least 2 frames and 2 coefficients");
  }
}

std::string make_id(EmotionCategory category, const char* split,
                    size_t index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04zu", index);
  return std::string(category_name(category)) + "_" + split + "_" + buf;
}

UtteranceRecord make_record(const FixtureConfig& config,
                            const std::vector<double>& direction,
                            EmotionCategory category, const char* split,
                            size_t index, std::mt19937_64& rng) {
  UtteranceRecord record;
  record.utterance_id = make_id(category, split, index);
  record.category = category;

  size_t span = config.max_phonemes - config.min_phonemes + 1;
  size_t n_phonemes = config.min_phonemes + static_cast<size_t>(rng() % span);

  record.alignment.utterance_id = record.utterance_id;
  double t = 0.0;
  for (size_t k = 0; k < n_phonemes; ++k) {
    size_t label_index = static_cast<size_t>(rng() % kInventory.size());
    double duration = uniform_range(rng, 0.05, 0.3);
    record.alignment.phonemes.push_back(
        {kInventory[label_index], t, t + duration});
    t += duration;

    FeatureVector fragment;
    fragment.values.resize(config.dim);
    double scale = category == EmotionCategory::kNeutral
                       ? 0.0
                       : config.separation * phoneme_strength(label_index);
    for (size_t d = 0; d < config.dim; ++d) {
      fragment.values[d] = scale * direction[d] + config.noise * gaussian(rng);
    }
    record.fragment_features.push_back(std::move(fragment));
  }

  record.utterance_features.values.assign(config.dim, 0.0);
  for (const FeatureVector& fragment : record.fragment_features) {
    for (size_t d = 0; d < config.dim; ++d) {
      record.utterance_features.values[d] += fragment.values[d];
    }
  }
  for (size_t d = 0; d < config.dim; ++d) {
    record.utterance_features.values[d] /= static_cast<double>(n_phonemes);
  }
  return record;
}

// Smooth AR(1) walk standing in for a mel-cepstral trajectory.
FrameSequence make_eval_pred(const FixtureConfig& config,
                             std::mt19937_64& rng) {
  FrameSequence frames;
  frames.dim = config.eval_dim;
  std::vector<double> state(frames.dim);
  for (double& v : state) v = gaussian(rng);
  for (size_t t = 0; t < config.eval_frames; ++t) {
    for (double& v : state) v = 0.95 * v + 0.25 * gaussian(rng);
    frames.values.insert(frames.values.end(), state.begin(), state.end());
  }
  return frames;
}

// The target is the same trajectory with occasional repeated frames and a
// little jitter, so the aligned distance is small but non-zero.
FrameSequence make_eval_target(const FrameSequence& pred,
                               std::mt19937_64& rng) {
  FrameSequence frames;
  frames.dim = pred.dim;
  for (size_t t = 0; t < pred.size(); ++t) {
    size_t copies = 1 + (rng() % 4 == 0 ? 1 : 0);
    std::span<const double> frame = pred.frame(t);
    for (size_t c = 0; c < copies; ++c) {
      for (double v : frame) {
        frames.values.push_back(v + 0.02 * gaussian(rng));
      }
    }
  }
  return frames;
}

}  // namespace

FixturePaths gen_fixtures(const FixtureConfig& config) {
  validate_fixture_config(config);
  std::filesystem::path out_dir(config.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw Error(StatusCode::kIoError,
                "cannot create directory '" + config.out_dir + "': " +
                    ec.message());
  }

  std::mt19937_64 rng(config.seed);

  // One planted unit direction per emotional category, drawn up front so the
  // directions depend only on the seed and dim.
  std::vector<std::vector<double>> directions(kAllCategories.size());
  for (size_t c = 0; c < kAllCategories.size(); ++c) {
    std::vector<double>& u = directions[c];
    u.resize(config.dim);
    if (kAllCategories[c] == EmotionCategory::kNeutral) continue;
    double norm = 0.0;
    for (double& v : u) {
      v = gaussian(rng);
      norm += v * v;
    }
    norm = std::sqrt(norm);
    for (double& v : u) v /= norm;
  }

  std::vector<UtteranceRecord> train;
  std::vector<UtteranceRecord> holdout;
  for (size_t c = 0; c < kAllCategories.size(); ++c) {
    for (size_t i = 0; i < config.n_train; ++i) {
      train.push_back(make_record(config, directions[c], kAllCategories[c],
                                  "train", i, rng));
    }
    for (size_t i = 0; i < config.n_holdout; ++i) {
      holdout.push_back(make_record(config, directions[c], kAllCategories[c],
                                    "holdout", i, rng));
    }
  }
  auto by_id = [](const UtteranceRecord& a, const UtteranceRecord& b) {
    return a.utterance_id < b.utterance_id;
  };
  std::sort(train.begin(), train.end(), by_id);
  std::sort(holdout.begin(), holdout.end(), by_id);

  FixturePaths paths;
  paths.train_features = (out_dir / "train_features.jsonl").string();
  paths.train_alignments = (out_dir / "train_alignments.csv").string();
  paths.holdout_features = (out_dir / "holdout_features.jsonl").string();
  paths.holdout_alignments = (out_dir / "holdout_alignments.csv").string();
  paths.eval_pred = (out_dir / "eval_pred.csv").string();
  paths.eval_target = (out_dir / "eval_target.csv").string();

  save_dataset(train, paths.train_features, paths.train_alignments);
  save_dataset(holdout, paths.holdout_features, paths.holdout_alignments);

  FrameSequence pred = make_eval_pred(config, rng);
  FrameSequence target = make_eval_target(pred, rng);
  save_frames_csv(paths.eval_pred, pred);
  save_frames_csv(paths.eval_target, target);
  return paths;
}

}  // namespace emorank
