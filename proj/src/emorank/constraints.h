// emorank/constraints.h

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

#ifndef EMORANK_CONSTRAINTS_H_
#define EMORANK_CONSTRAINTS_H_

#include <cstdint>
#include <span>

#include "emorank/types.h"

namespace emorank {

// Builds the ordered set O (every target-category utterance above every
// neutral one) and the similar set S (within-category pairs from the target
// category and from neutral). Each set is capped at max_pairs; when the
// exhaustive set is larger, a subset is sampled without replacement,
// deterministically from the seed.
PairConstraintSet build_constraints(std::span<const UtteranceRecord> records,
                                    EmotionCategory target, size_t max_pairs,
                                    uint64_t seed);

}  // namespace emorank

#endif  // EMORANK_CONSTRAINTS_H_
