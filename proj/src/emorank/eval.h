// emorank/eval.h

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

#ifndef EMORANK_EVAL_H_
#define EMORANK_EVAL_H_

#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "emorank/error.h"

namespace emorank {

// Mel-cepstral frames, row-major, one shared dimension.
struct FrameSequence {
  size_t dim = 0;
  std::vector<double> values;

  size_t size() const { return dim == 0 ? 0 : values.size() / dim; }
  std::span<const double> frame(size_t index) const {
    return std::span<const double>(values).subspan(index * dim, dim);
  }
};

void validate_frames(const FrameSequence& frames);

enum class LocalCost {
  kEuclidean,
  kSquaredEuclidean,
  kManhattan,
};

LocalCost parse_local_cost(std::string_view name);
std::string_view local_cost_name(LocalCost metric);

// Monotonic warping path from (0,0) to (|A|-1,|B|-1); every step increments
// i, j, or both by exactly 1.
struct AlignmentPath {
  std::vector<std::pair<size_t, size_t>> pairs;
};

void validate_path(const AlignmentPath& path, size_t len_a, size_t len_b);

struct DtwResult {
  AlignmentPath path;
  double total_cost = 0.0;
};

// Minimum-total-cost alignment under steps {(1,0),(0,1),(1,1)}. Backtracking
// ties prefer the diagonal, then (1,0), then (0,1). band > 0 restricts the
// search to |i - j| <= band (Sakoe-Chiba).
DtwResult dtw(const FrameSequence& a, const FrameSequence& b,
              LocalCost metric = LocalCost::kEuclidean, size_t band = 0);

struct McdOptions {
  bool skip_c0 = true;
  // 10 sqrt(2) / ln 10, the conventional dB scaling.
  double scale_db = 10.0 * std::numbers::sqrt2 / std::numbers::ln10;
};

// Mean over path pairs of scale_db * sqrt(sum_d (a[i][d] - b[j][d])^2),
// starting at coefficient 1 when skip_c0 is set.
double mcd(const FrameSequence& a, const FrameSequence& b,
           const AlignmentPath& path, const McdOptions& options = {});

// DTW with Euclidean cost over all coefficients, then MCD over the aligned
// path excluding the 0th coefficient.
double evaluate_mcd(const FrameSequence& pred, const FrameSequence& target);

// CSV with header c0..c{D-1}, one frame per row.
FrameSequence load_frames_csv(const std::string& path);
void save_frames_csv(const std::string& path, const FrameSequence& frames);

}  // namespace emorank

#endif  // EMORANK_EVAL_H_
