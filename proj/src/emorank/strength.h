// emorank/strength.h

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

#ifndef EMORANK_STRENGTH_H_
#define EMORANK_STRENGTH_H_

#include <span>
#include <string>
#include <vector>

#include "emorank/ranker.h"
#include "emorank/types.h"

namespace emorank {

// Raw ranking score of every phoneme fragment, in alignment order.
std::vector<double> extract_raw_strengths(const RankingModel& model,
                                          const UtteranceRecord& record);

NormalizationStats fit_normalization(std::span<const double> raw,
                                     EmotionCategory category);

// Min-max map onto [0,1], clamped; a degenerate min==max maps to 0.5.
std::vector<double> normalize(std::span<const double> raw,
                              const NormalizationStats& stats);

// Piecewise-linear resampling. Source values sit at parameters m/(M-1) on
// [0,1] (a single value spans the whole interval); the output samples the
// interpolant at k/(N-1), or at 0.5 when N == 1. N == M copies the source
// exactly.
std::vector<double> resample_curve(std::span<const double> source,
                                   size_t target_len);

// extract -> normalize -> resample onto the target phoneme sequence. The
// curve keeps the reference utterance's id and category.
StrengthCurve transfer_strengths(const RankingModel& model,
                                 const NormalizationStats& stats,
                                 const UtteranceRecord& reference,
                                 std::span<const std::string> target_phonemes);

// Accepts a manually designed curve iff it has n_phonemes values, all in
// [0,1]. Empty labels are replaced by p0..p{n-1}.
StrengthCurve validate_control(std::span<const double> values,
                               size_t n_phonemes,
                               const std::string& utterance_id,
                               EmotionCategory category,
                               std::vector<std::string> labels = {});

}  // namespace emorank

#endif  // EMORANK_STRENGTH_H_
