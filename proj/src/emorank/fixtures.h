// emorank/fixtures.h

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

#ifndef EMORANK_FIXTURES_H_
#define EMORANK_FIXTURES_H_

#include <cstdint>
#include <string>

namespace emorank {

// Synthetic corpus generator. Each emotional category gets a random unit
// direction in feature space; a fragment's feature vector is
// separation * s(phoneme) * direction plus isotropic noise, where s assigns
// each inventory phoneme a fixed strength on [0,1]. Neutral fragments are
// noise only, so ranking against neutral recovers the planted direction and
// phoneme identity alone predicts strength.
struct FixtureConfig {
  std::string out_dir;
  uint64_t seed = 1;
  size_t dim = 16;
  size_t n_train = 30;    // utterances per category
  size_t n_holdout = 10;  // utterances per category
  size_t min_phonemes = 6;
  size_t max_phonemes = 14;
  double separation = 4.0;
  double noise = 0.05;
  size_t eval_frames = 40;  // length of the synthetic cepstral pair
  size_t eval_dim = 13;
};

struct FixturePaths {
  std::string train_features;
  std::string train_alignments;
  std::string holdout_features;
  std::string holdout_alignments;
  std::string eval_pred;
  std::string eval_target;
};

FixturePaths gen_fixtures(const FixtureConfig& config);

}  // namespace emorank

#endif  // EMORANK_FIXTURES_H_
