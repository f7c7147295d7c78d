// emorank/strength.cc

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

#include "emorank/strength.h"

#include <algorithm>
#include <cmath>

namespace emorank {

std::vector<double> extract_raw_strengths(const RankingModel& model,
                                          const UtteranceRecord& record) {
  std::vector<double> raw;
  raw.reserve(record.fragment_features.size());
  for (const FeatureVector& fragment : record.fragment_features) {
    raw.push_back(score(model, fragment.values));
  }
  return raw;
}

NormalizationStats fit_normalization(std::span<const double> raw,
                                     EmotionCategory category) {
  if (raw.empty()) {
    throw Error(StatusCode::kInvalidArgument,
                "cannot fit normalization on empty scores");
  }
  NormalizationStats stats;
  stats.category = category;
  stats.min_raw = raw.front();
  stats.max_raw = raw.front();
  for (double v : raw) {
    if (!std::isfinite(v)) {
      throw Error(StatusCode::kInvalidArgument,
                  "non-finite score in normalization input");
    }
    stats.min_raw = std::min(stats.min_raw, v);
    stats.max_raw = std::max(stats.max_raw, v);
  }
  return stats;
}

std::vector<double> normalize(std::span<const double> raw,
                              const NormalizationStats& stats) {
  validate_stats(stats);
  std::vector<double> out;
  out.reserve(raw.size());
  const double range = stats.max_raw - stats.min_raw;
  for (double v : raw) {
    if (range == 0.0) {
      out.push_back(0.5);
    } else {
      out.push_back(std::clamp((v - stats.min_raw) / range, 0.0, 1.0));
    }
  }
  return out;
}

std::vector<double> resample_curve(std::span<const double> source,
                                   size_t target_len) {
  if (source.empty()) {
    throw Error(StatusCode::kInvalidArgument, "resample: empty source curve");
  }
  if (target_len == 0) {
    throw Error(StatusCode::kInvalidArgument, "resample: target length is 0");
  }
  const size_t m = source.size();
  std::vector<double> out;
  out.reserve(target_len);
  if (m == 1) {
    out.assign(target_len, source[0]);
    return out;
  }
  if (target_len == m) {
    out.assign(source.begin(), source.end());
    return out;
  }
  for (size_t k = 0; k < target_len; ++k) {
    // Multiply before dividing so coincident knots are hit exactly.
    double pos = target_len == 1
                     ? 0.5 * static_cast<double>(m - 1)
                     : static_cast<double>(k) * static_cast<double>(m - 1) /
                           static_cast<double>(target_len - 1);
    size_t lo = std::min(static_cast<size_t>(pos), m - 2);
    double frac = pos - static_cast<double>(lo);
    double a = source[lo];
    double b = source[lo + 1];
    // Land on knots exactly; a + 1.0 * (b - a) can miss b by an ulp.
    double v = frac == 0.0 ? a : frac == 1.0 ? b : a + frac * (b - a);
    out.push_back(std::clamp(v, std::min(a, b), std::max(a, b)));
  }
  return out;
}

StrengthCurve transfer_strengths(const RankingModel& model,
                                 const NormalizationStats& stats,
                                 const UtteranceRecord& reference,
                                 std::span<const std::string> target_phonemes) {
  if (reference.fragment_features.empty()) {
    throw Error(StatusCode::kInvalidArgument,
                "reference utterance '" + reference.utterance_id +
                    "' has no phoneme fragments");
  }
  if (target_phonemes.empty()) {
    throw Error(StatusCode::kInvalidArgument, "no target phonemes");
  }
  std::vector<double> raw = extract_raw_strengths(model, reference);
  std::vector<double> normalized = normalize(raw, stats);
  StrengthCurve curve;
  curve.utterance_id = reference.utterance_id;
  curve.category = reference.category;
  curve.phoneme_labels.assign(target_phonemes.begin(), target_phonemes.end());
  curve.strengths = resample_curve(normalized, target_phonemes.size());
  validate_curve(curve);
  return curve;
}

StrengthCurve validate_control(std::span<const double> values,
                               size_t n_phonemes,
                               const std::string& utterance_id,
                               EmotionCategory category,
                               std::vector<std::string> labels) {
  if (n_phonemes == 0) {
    throw Error(StatusCode::kInvalidArgument, "n_phonemes must be positive");
  }
  if (values.size() != n_phonemes) {
    throw Error(StatusCode::kInvalidArgument,
                "length mismatch: got " + std::to_string(values.size()) +
                    " strengths for " + std::to_string(n_phonemes) +
                    " phonemes");
  }
  for (size_t k = 0; k < values.size(); ++k) {
    if (!(values[k] >= 0.0 && values[k] <= 1.0)) {
      throw Error(StatusCode::kInvalidArgument,
                  "strength out of range at index " + std::to_string(k));
    }
  }
  if (labels.empty()) {
    for (size_t k = 0; k < n_phonemes; ++k) {
      labels.push_back("p" + std::to_string(k));
    }
  } else if (labels.size() != n_phonemes) {
    throw Error(StatusCode::kInvalidArgument,
                "length mismatch: got " + std::to_string(labels.size()) +
                    " phoneme labels for " + std::to_string(n_phonemes) +
                    " phonemes");
  }
  StrengthCurve curve;
  curve.utterance_id = utterance_id;
  curve.category = category;
  curve.phoneme_labels = std::move(labels);
  curve.strengths.assign(values.begin(), values.end());
  return curve;
}

}  // namespace emorank
