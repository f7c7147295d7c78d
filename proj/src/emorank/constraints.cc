// emorank/constraints.cc

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

#include "emorank/constraints.h"

#include <random>
#include <string>
#include <vector>

#include "emorank/util.h"

namespace emorank {

namespace {

// Keeps the first max_pairs elements of a seeded partial shuffle, then
// restores a stable order so the output does not leak shuffle order.
void cap_pairs(std::vector<IndexPair>& pairs, size_t max_pairs,
               std::mt19937_64& rng) {
  if (pairs.size() <= max_pairs) return;
  for (size_t k = 0; k < max_pairs; ++k) {
    size_t j = k + static_cast<size_t>(rng() % (pairs.size() - k));
    std::swap(pairs[k], pairs[j]);
  }
  pairs.resize(max_pairs);
  std::sort(pairs.begin(), pairs.end(), [](const IndexPair& a, const IndexPair& b) {
    return a.i < b.i || (a.i == b.i && a.j < b.j);
  });
}

}  // namespace

PairConstraintSet build_constraints(std::span<const UtteranceRecord> records,
                                    EmotionCategory target, size_t max_pairs,
                                    uint64_t seed) {
  if (target == EmotionCategory::kNeutral) {
    throw Error(StatusCode::kInvalidArgument,
                "target category must be emotional, not neutral");
  }
  if (max_pairs == 0) {
    throw Error(StatusCode::kInvalidArgument, "max_pairs must be positive");
  }
  std::vector<size_t> target_idx;
  std::vector<size_t> neutral_idx;
  for (size_t k = 0; k < records.size(); ++k) {
    if (records[k].category == target) target_idx.push_back(k);
    if (records[k].category == EmotionCategory::kNeutral) neutral_idx.push_back(k);
  }
  if (target_idx.empty()) {
    throw Error(StatusCode::kInvalidArgument,
                "missing target category '" +
                    std::string(category_name(target)) + "' in dataset");
  }
  if (neutral_idx.empty()) {
    throw Error(StatusCode::kInvalidArgument, "missing neutral utterances");
  }

  PairConstraintSet constraints;
  for (size_t i : target_idx) {
    for (size_t j : neutral_idx) {
      constraints.ordered.push_back(IndexPair{i, j});
    }
  }
  for (const std::vector<size_t>* group : {&target_idx, &neutral_idx}) {
    for (size_t a = 0; a < group->size(); ++a) {
      for (size_t b = a + 1; b < group->size(); ++b) {
        constraints.similar.push_back(IndexPair{(*group)[a], (*group)[b]});
      }
    }
  }

  std::mt19937_64 rng(seed);
  cap_pairs(constraints.ordered, max_pairs, rng);
  cap_pairs(constraints.similar, max_pairs, rng);
  return constraints;
}

}  // namespace emorank
