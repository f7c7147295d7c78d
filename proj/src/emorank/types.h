// emorank/types.h

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

#ifndef EMORANK_TYPES_H_
#define EMORANK_TYPES_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emorank/error.h"

namespace emorank {

// Neutral plus the six emotional categories of the corpus.
enum class EmotionCategory {
  kNeutral = 0,
  kHappy,
  kAngry,
  kDisgust,
  kFear,
  kSurprise,
  kSad,
};

constexpr std::array<EmotionCategory, 7> kAllCategories = {
    EmotionCategory::kNeutral,  EmotionCategory::kHappy,
    EmotionCategory::kAngry,    EmotionCategory::kDisgust,
    EmotionCategory::kFear,     EmotionCategory::kSurprise,
    EmotionCategory::kSad,
};

std::string_view category_name(EmotionCategory category);
std::optional<EmotionCategory> try_parse_category(std::string_view name);
// Throws kParseError for anything outside the seven-value set.
EmotionCategory parse_category(std::string_view name);

// Fixed-dimension acoustic/emotion feature vector for an utterance or a
// phoneme fragment. Entries must be finite.
struct FeatureVector {
  std::vector<double> values;

  size_t dim() const { return values.size(); }
  bool operator==(const FeatureVector&) const = default;
};

struct PhonemeSpan {
  std::string label;
  double start_s = 0.0;
  double end_s = 0.0;

  bool operator==(const PhonemeSpan&) const = default;
};

// Phoneme boundaries of one utterance, sorted by start time, non-overlapping.
struct PhonemeAlignment {
  std::string utterance_id;
  std::vector<PhonemeSpan> phonemes;

  bool operator==(const PhonemeAlignment&) const = default;
};

// One utterance: an utterance-level feature vector plus one feature vector
// per phoneme fragment, all of the same dimension.
struct UtteranceRecord {
  std::string utterance_id;
  EmotionCategory category = EmotionCategory::kNeutral;
  FeatureVector utterance_features;
  std::vector<FeatureVector> fragment_features;
  PhonemeAlignment alignment;

  bool operator==(const UtteranceRecord&) const = default;
};

// Per-phoneme emotion strengths in [0,1].
struct StrengthCurve {
  std::string utterance_id;
  EmotionCategory category = EmotionCategory::kNeutral;
  std::vector<std::string> phoneme_labels;
  std::vector<double> strengths;

  bool operator==(const StrengthCurve&) const = default;
};

// Per-category min-max statistics used to map raw ranking scores onto [0,1].
struct NormalizationStats {
  EmotionCategory category = EmotionCategory::kNeutral;
  double min_raw = 0.0;
  double max_raw = 0.0;
};

struct IndexPair {
  size_t i = 0;  // ranks above j for ordered pairs
  size_t j = 0;

  bool operator==(const IndexPair&) const = default;
};

// Ranking constraints over a dataset: ordered pairs (emotional above
// neutral) and similar pairs (same category).
struct PairConstraintSet {
  std::vector<IndexPair> ordered;
  std::vector<IndexPair> similar;

  bool empty() const { return ordered.empty() && similar.empty(); }
};

void validate_feature_vector(const FeatureVector& features,
                             const std::string& context);
void validate_alignment(const PhonemeAlignment& alignment);
void validate_record(const UtteranceRecord& record);
void validate_curve(const StrengthCurve& curve);
void validate_stats(const NormalizationStats& stats);
// Checks index validity, category structure and O/S disjointness against
// the records the pairs refer to.
void validate_constraints(const PairConstraintSet& constraints,
                          std::span<const UtteranceRecord> records);

}  // namespace emorank

#endif  // EMORANK_TYPES_H_
