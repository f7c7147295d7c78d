// emorank/dataset_io.h

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

#ifndef EMORANK_DATASET_IO_H_
#define EMORANK_DATASET_IO_H_

#include <span>
#include <string>
#include <vector>

#include "emorank/types.h"

namespace emorank {

// Features file: JSON Lines, one object per utterance with keys
// utterance_id, category, utterance_features, fragment_features.
// Alignment file: CSV `utterance_id,phoneme,start_s,end_s`, sorted by
// (utterance_id, start_s).
//
// Every returned record is validated: matching fragment/phoneme counts, one
// shared feature dimension across the whole dataset, finite values only.
std::vector<UtteranceRecord> load_dataset(const std::string& features_path,
                                          const std::string& alignments_path);

void save_dataset(std::span<const UtteranceRecord> records,
                  const std::string& features_path,
                  const std::string& alignments_path);

// Alignments alone (for prediction, where no acoustic features exist).
std::vector<PhonemeAlignment> load_alignments(const std::string& path);

// The shared feature dimension; throws on an empty or inconsistent dataset.
size_t dataset_dim(std::span<const UtteranceRecord> records);

// Strength-curve file: CSV `utterance_id,index,phoneme,strength` with the
// index running 0..n-1 within each utterance block. The file format carries
// no category column, so the caller names the category the curves belong to.
std::vector<StrengthCurve> load_curves_csv(const std::string& path,
                                           EmotionCategory category);

void write_curves_csv(const std::string& path,
                      std::span<const StrengthCurve> curves);

}  // namespace emorank

#endif  // EMORANK_DATASET_IO_H_
