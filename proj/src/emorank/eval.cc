// emorank/eval.cc

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

#include "emorank/eval.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "emorank/util.h"

namespace emorank {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double local_cost(std::span<const double> a, std::span<const double> b,
                  LocalCost metric) {
  double acc = 0.0;
  switch (metric) {
    case LocalCost::kEuclidean:
    case LocalCost::kSquaredEuclidean:
      for (size_t d = 0; d < a.size(); ++d) {
        double delta = a[d] - b[d];
        acc += delta * delta;
      }
      return metric == LocalCost::kEuclidean ? std::sqrt(acc) : acc;
    case LocalCost::kManhattan:
      for (size_t d = 0; d < a.size(); ++d) acc += std::abs(a[d] - b[d]);
      return acc;
  }
  return acc;
}

}  // namespace

void validate_frames(const FrameSequence& frames) {
  if (frames.dim == 0 || frames.values.empty()) {
    throw Error(StatusCode::kInvalidArgument, "empty frame sequence");
  }
  if (frames.values.size() % frames.dim != 0) {
    throw Error(StatusCode::kInvalidArgument,
                "frame buffer size is not a multiple of dim");
  }
  for (double v : frames.values) {
    if (!std::isfinite(v)) {
      throw Error(StatusCode::kInvalidArgument,
                  "non-finite value in frame sequence");
    }
  }
}

LocalCost parse_local_cost(std::string_view name) {
  if (name == "euclidean") return LocalCost::kEuclidean;
  if (name == "sqeuclidean") return LocalCost::kSquaredEuclidean;
  if (name == "manhattan") return LocalCost::kManhattan;
  throw Error(StatusCode::kParseError,
              "unknown local cost '" + std::string(name) +
                  "' (expected euclidean, sqeuclidean, or manhattan)");
}

std::string_view local_cost_name(LocalCost metric) {
  switch (metric) {
    case LocalCost::kEuclidean: return "euclidean";
    case LocalCost::kSquaredEuclidean: return "sqeuclidean";
    case LocalCost::kManhattan: return "manhattan";
  }
  return "euclidean";
}

void validate_path(const AlignmentPath& path, size_t len_a, size_t len_b) {
  if (path.pairs.empty()) {
    throw Error(StatusCode::kInvalidArgument, "invalid path: empty");
  }
  if (path.pairs.front() != std::pair<size_t, size_t>(0, 0)) {
    throw Error(StatusCode::kInvalidArgument,
                "invalid path: does not start at (0,0)");
  }
  if (path.pairs.back() != std::pair<size_t, size_t>(len_a - 1, len_b - 1)) {
    throw Error(StatusCode::kInvalidArgument,
                "invalid path: does not end at the final frame pair");
  }
  for (size_t k = 1; k < path.pairs.size(); ++k) {
    size_t di = path.pairs[k].first - path.pairs[k - 1].first;
    size_t dj = path.pairs[k].second - path.pairs[k - 1].second;
    if (di > 1 || dj > 1 || (di == 0 && dj == 0) ||
        path.pairs[k].first < path.pairs[k - 1].first ||
        path.pairs[k].second < path.pairs[k - 1].second) {
      throw Error(StatusCode::kInvalidArgument,
                  "invalid path: bad step at position " + std::to_string(k));
    }
  }
}

DtwResult dtw(const FrameSequence& a, const FrameSequence& b, LocalCost metric,
              size_t band) {
  validate_frames(a);
  validate_frames(b);
  if (a.dim != b.dim) {
    throw Error(StatusCode::kDimMismatch,
                "frame dim mismatch: " + std::to_string(a.dim) + " vs " +
                    std::to_string(b.dim));
  }
  const size_t n = a.size();
  const size_t m = b.size();
  const size_t diff = n > m ? n - m : m - n;
  if (band > 0 && diff > band) {
    throw Error(StatusCode::kInvalidArgument,
                "band " + std::to_string(band) +
                    " cannot align lengths " + std::to_string(n) + " and " +
                    std::to_string(m));
  }

  // 0 = diagonal, 1 = from (i-1,j), 2 = from (i,j-1).
  std::vector<double> cost(n * m, kInf);
  std::vector<uint8_t> step(n * m, 0);
  auto at = [m](size_t i, size_t j) { return i * m + j; };
  auto in_band = [band](size_t i, size_t j) {
    if (band == 0) return true;
    size_t d = i > j ? i - j : j - i;
    return d <= band;
  };

  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) {
      if (!in_band(i, j)) continue;
      double c = local_cost(a.frame(i), b.frame(j), metric);
      if (i == 0 && j == 0) {
        cost[at(i, j)] = c;
        continue;
      }
      double best = kInf;
      uint8_t from = 0;
      if (i > 0 && j > 0 && cost[at(i - 1, j - 1)] < best) {
        best = cost[at(i - 1, j - 1)];
        from = 0;
      }
      if (i > 0 && cost[at(i - 1, j)] < best) {
        best = cost[at(i - 1, j)];
        from = 1;
      }
      if (j > 0 && cost[at(i, j - 1)] < best) {
        best = cost[at(i, j - 1)];
        from = 2;
      }
      cost[at(i, j)] = best + c;
      step[at(i, j)] = from;
    }
  }

  DtwResult result;
  result.total_cost = cost[at(n - 1, m - 1)];
  size_t i = n - 1;
  size_t j = m - 1;
  result.path.pairs.emplace_back(i, j);
  while (i != 0 || j != 0) {
    switch (step[at(i, j)]) {
      case 0: --i; --j; break;
      case 1: --i; break;
      case 2: --j; break;
    }
    result.path.pairs.emplace_back(i, j);
  }
  std::reverse(result.path.pairs.begin(), result.path.pairs.end());
  return result;
}

double mcd(const FrameSequence& a, const FrameSequence& b,
           const AlignmentPath& path, const McdOptions& options) {
  validate_frames(a);
  validate_frames(b);
  if (a.dim != b.dim) {
    throw Error(StatusCode::kDimMismatch, "frame dim mismatch");
  }
  validate_path(path, a.size(), b.size());
  const size_t d0 = options.skip_c0 ? 1 : 0;
  if (d0 >= a.dim) {
    throw Error(StatusCode::kInvalidArgument,
                "cannot skip c0 with dim " + std::to_string(a.dim));
  }
  double acc = 0.0;
  for (const auto& [i, j] : path.pairs) {
    std::span<const double> fa = a.frame(i);
    std::span<const double> fb = b.frame(j);
    double sq = 0.0;
    for (size_t d = d0; d < a.dim; ++d) {
      double delta = fa[d] - fb[d];
      sq += delta * delta;
    }
    acc += options.scale_db * std::sqrt(sq);
  }
  return acc / static_cast<double>(path.pairs.size());
}

double evaluate_mcd(const FrameSequence& pred, const FrameSequence& target) {
  DtwResult aligned = dtw(pred, target, LocalCost::kEuclidean);
  return mcd(pred, target, aligned.path, McdOptions{});
}

FrameSequence load_frames_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(StatusCode::kIoError, "cannot open '" + path + "' for reading");
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(StatusCode::kParseError, path + ":1: empty file");
  }
  auto header = split(line, ',');
  for (size_t d = 0; d < header.size(); ++d) {
    if (header[d] != "c" + std::to_string(d)) {
      throw Error(StatusCode::kParseError,
                  path + ":1: expected header c0..c" +
                      std::to_string(header.size() - 1));
    }
  }
  FrameSequence frames;
  frames.dim = header.size();
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string context = path + ":" + std::to_string(line_no);
    auto fields = split(line, ',');
    if (fields.size() != frames.dim) {
      throw Error(StatusCode::kParseError,
                  context + ": expected " + std::to_string(frames.dim) +
                      " columns, got " + std::to_string(fields.size()));
    }
    for (const auto& field : fields) {
      frames.values.push_back(parse_double(field, context));
    }
  }
  validate_frames(frames);
  return frames;
}

void save_frames_csv(const std::string& path, const FrameSequence& frames) {
  validate_frames(frames);
  std::ofstream out(path);
  if (!out) {
    throw Error(StatusCode::kIoError, "cannot open '" + path + "' for writing");
  }
  for (size_t d = 0; d < frames.dim; ++d) {
    out << (d == 0 ? "" : ",") << 'c' << d;
  }
  out << "\n";
  for (size_t t = 0; t < frames.size(); ++t) {
    std::span<const double> frame = frames.frame(t);
    for (size_t d = 0; d < frames.dim; ++d) {
      out << (d == 0 ? "" : ",") << format_double(frame[d]);
    }
    out << "\n";
  }
}

}  // namespace emorank
