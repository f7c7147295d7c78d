// emorank/types.cc

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

#include "emorank/types.h"

#include <cmath>
#include <set>
#include <utility>

namespace emorank {

std::string_view category_name(EmotionCategory category) {
  switch (category) {
    case EmotionCategory::kNeutral: return "neutral";
    case EmotionCategory::kHappy: return "happy";
    case EmotionCategory::kAngry: return "angry";
    case EmotionCategory::kDisgust: return "disgust";
    case EmotionCategory::kFear: return "fear";
    case EmotionCategory::kSurprise: return "surprise";
    case EmotionCategory::kSad: return "sad";
  }
  return "neutral";
}

std::optional<EmotionCategory> try_parse_category(std::string_view name) {
  for (EmotionCategory category : kAllCategories) {
    if (category_name(category) == name) return category;
  }
  return std::nullopt;
}

EmotionCategory parse_category(std::string_view name) {
  if (auto category = try_parse_category(name)) return *category;
  throw Error(StatusCode::kParseError,
              "unknown emotion category '" + std::string(name) +
                  "' (expected one of neutral, happy, angry, disgust, fear, "
                  "surprise, sad)");
}

void validate_feature_vector(const FeatureVector& features,
                             const std::string& context) {
  if (features.values.empty()) {
    throw Error(StatusCode::kInvalidArgument, context + ": empty feature vector");
  }
  for (double v : features.values) {
    if (!std::isfinite(v)) {
      throw Error(StatusCode::kInvalidArgument, context + ": non-finite feature");
    }
  }
}

void validate_alignment(const PhonemeAlignment& alignment) {
  const std::string context = "alignment for utterance '" +
                              alignment.utterance_id + "'";
  double previous_end = 0.0;
  for (size_t k = 0; k < alignment.phonemes.size(); ++k) {
    const PhonemeSpan& span = alignment.phonemes[k];
    if (span.label.empty()) {
      throw Error(StatusCode::kInvalidArgument, context + ": empty phoneme label");
    }
    if (!(span.start_s >= 0.0) || !(span.end_s > span.start_s) ||
        !std::isfinite(span.end_s)) {
      throw Error(StatusCode::kInvalidArgument,
                  context + ": bad span [" + std::to_string(span.start_s) +
                      ", " + std::to_string(span.end_s) + ") for phoneme '" +
                      span.label + "'");
    }
    if (k > 0 && span.start_s < previous_end) {
      throw Error(StatusCode::kInvalidArgument,
                  context + ": phonemes overlap or are unsorted at index " +
                      std::to_string(k));
    }
    previous_end = span.end_s;
  }
}

void validate_record(const UtteranceRecord& record) {
  const std::string head = "utterance '" + record.utterance_id + "'";
  validate_feature_vector(record.utterance_features, head);
  if (record.fragment_features.size() != record.alignment.phonemes.size()) {
    throw Error(StatusCode::kInvalidArgument,
                head + ": fragment count mismatch (" +
                    std::to_string(record.fragment_features.size()) +
                    " fragments vs " +
                    std::to_string(record.alignment.phonemes.size()) +
                    " phonemes)");
  }
  const size_t dim = record.utterance_features.dim();
  for (size_t k = 0; k < record.fragment_features.size(); ++k) {
    const std::string context = head + " fragment " + std::to_string(k);
    validate_feature_vector(record.fragment_features[k], context);
    if (record.fragment_features[k].dim() != dim) {
      throw Error(StatusCode::kDimMismatch,
                  context + ": dim " +
                      std::to_string(record.fragment_features[k].dim()) +
                      " differs from utterance dim " + std::to_string(dim));
    }
  }
  if (record.alignment.utterance_id != record.utterance_id) {
    throw Error(StatusCode::kInvalidArgument,
                head + ": alignment belongs to utterance '" +
                    record.alignment.utterance_id + "'");
  }
  validate_alignment(record.alignment);
}

void validate_curve(const StrengthCurve& curve) {
  const std::string head = "strength curve '" + curve.utterance_id + "'";
  if (curve.strengths.size() != curve.phoneme_labels.size()) {
    throw Error(StatusCode::kInvalidArgument,
                head + ": length mismatch (" +
                    std::to_string(curve.strengths.size()) + " strengths vs " +
                    std::to_string(curve.phoneme_labels.size()) + " labels)");
  }
  for (size_t k = 0; k < curve.strengths.size(); ++k) {
    const double v = curve.strengths[k];
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(StatusCode::kInvalidArgument,
                  head + ": strength out of range at index " +
                      std::to_string(k));
    }
  }
}

void validate_stats(const NormalizationStats& stats) {
  if (!std::isfinite(stats.min_raw) || !std::isfinite(stats.max_raw) ||
      stats.min_raw > stats.max_raw) {
    throw Error(StatusCode::kInvalidArgument,
                "bad normalization stats: min_raw=" +
                    std::to_string(stats.min_raw) +
                    " max_raw=" + std::to_string(stats.max_raw));
  }
}

void validate_constraints(const PairConstraintSet& constraints,
                          std::span<const UtteranceRecord> records) {
  std::set<std::pair<size_t, size_t>> seen_ordered;
  for (const IndexPair& pair : constraints.ordered) {
    if (pair.i >= records.size() || pair.j >= records.size()) {
      throw Error(StatusCode::kInvalidArgument,
                  "ordered pair index out of range");
    }
    if (records[pair.i].category == EmotionCategory::kNeutral ||
        records[pair.j].category != EmotionCategory::kNeutral) {
      throw Error(StatusCode::kInvalidArgument,
                  "ordered pair must rank an emotional utterance above a "
                  "neutral one");
    }
    seen_ordered.emplace(pair.i, pair.j);
  }
  for (const IndexPair& pair : constraints.similar) {
    if (pair.i >= records.size() || pair.j >= records.size()) {
      throw Error(StatusCode::kInvalidArgument,
                  "similar pair index out of range");
    }
    if (seen_ordered.count({pair.i, pair.j}) ||
        seen_ordered.count({pair.j, pair.i})) {
      throw Error(StatusCode::kInvalidArgument,
                  "pair appears in both ordered and similar sets");
    }
    if (records[pair.i].category != records[pair.j].category) {
      throw Error(StatusCode::kInvalidArgument,
                  "similar pair must share one category");
    }
  }
}

}  // namespace emorank
