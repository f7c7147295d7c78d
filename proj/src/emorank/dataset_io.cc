// emorank/dataset_io.cc

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

#include "emorank/dataset_io.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "emorank/util.h"

namespace emorank {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(StatusCode::kIoError, "cannot open '" + path + "' for reading");
  }
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(StatusCode::kIoError, "cannot open '" + path + "' for writing");
  }
  return out;
}

std::string location(const std::string& path, size_t line) {
  return path + ":" + std::to_string(line);
}

// CSV fields here are plain tokens (ids, phoneme labels, numbers); reject
// anything that would need quoting.
void check_csv_token(const std::string& token, const std::string& context) {
  if (token.empty() ||
      token.find_first_of(",\"\r\n") != std::string::npos) {
    throw Error(StatusCode::kInvalidArgument,
                context + ": token not representable in CSV: '" + token + "'");
  }
}

double feature_number(const json& value, const std::string& context) {
  if (!value.is_number()) {
    throw Error(StatusCode::kParseError, context + ": feature is not a number");
  }
  double v = value.get<double>();
  if (!std::isfinite(v)) {
    throw Error(StatusCode::kInvalidArgument, context + ": non-finite feature");
  }
  return v;
}

UtteranceRecord parse_features_line(const std::string& line,
                                    const std::string& context) {
  json object;
  try {
    object = json::parse(line);
  } catch (const json::parse_error& e) {
    // Python's json module emits bare NaN/Infinity tokens, which strict JSON
    // rejects; report those as what they are.
    if (line.find("NaN") != std::string::npos ||
        line.find("Infinity") != std::string::npos) {
      throw Error(StatusCode::kInvalidArgument, context + ": non-finite feature");
    }
    throw Error(StatusCode::kParseError,
                context + ": invalid JSON: " + std::string(e.what()));
  }
  if (!object.is_object()) {
    throw Error(StatusCode::kParseError, context + ": line is not a JSON object");
  }
  for (const char* key :
       {"utterance_id", "category", "utterance_features", "fragment_features"}) {
    if (!object.contains(key)) {
      throw Error(StatusCode::kParseError,
                  context + ": missing field '" + key + "'");
    }
  }
  UtteranceRecord record;
  if (!object["utterance_id"].is_string()) {
    throw Error(StatusCode::kParseError,
                context + ": field 'utterance_id' must be a string");
  }
  record.utterance_id = object["utterance_id"].get<std::string>();
  if (record.utterance_id.empty()) {
    throw Error(StatusCode::kParseError, context + ": empty utterance_id");
  }
  if (!object["category"].is_string()) {
    throw Error(StatusCode::kParseError,
                context + ": field 'category' must be a string");
  }
  try {
    record.category = parse_category(object["category"].get<std::string>());
  } catch (const Error& e) {
    throw Error(e.code(), context + ": " + e.what());
  }
  if (!object["utterance_features"].is_array()) {
    throw Error(StatusCode::kParseError,
                context + ": field 'utterance_features' must be an array");
  }
  for (const auto& value : object["utterance_features"]) {
    record.utterance_features.values.push_back(
        feature_number(value, context + ": utterance_features"));
  }
  if (!object["fragment_features"].is_array()) {
    throw Error(StatusCode::kParseError,
                context + ": field 'fragment_features' must be an array");
  }
  for (const auto& fragment : object["fragment_features"]) {
    if (!fragment.is_array()) {
      throw Error(StatusCode::kParseError,
                  context + ": each fragment must be an array");
    }
    FeatureVector features;
    for (const auto& value : fragment) {
      features.values.push_back(
          feature_number(value, context + ": fragment_features"));
    }
    record.fragment_features.push_back(std::move(features));
  }
  return record;
}

struct AlignmentRow {
  std::string utterance_id;
  PhonemeSpan span;
};

std::vector<AlignmentRow> load_alignment_rows(const std::string& path) {
  std::ifstream in = open_input(path);
  std::string line;
  size_t line_no = 1;
  if (!std::getline(in, line) || line != "utterance_id,phoneme,start_s,end_s") {
    throw Error(StatusCode::kParseError,
                location(path, 1) +
                    ": expected header 'utterance_id,phoneme,start_s,end_s'");
  }
  std::vector<AlignmentRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string context = location(path, line_no);
    auto fields = split(line, ',');
    if (fields.size() != 4) {
      throw Error(StatusCode::kParseError,
                  context + ": expected 4 fields, got " +
                      std::to_string(fields.size()));
    }
    AlignmentRow row;
    row.utterance_id = std::string(fields[0]);
    row.span.label = std::string(fields[1]);
    row.span.start_s = parse_double(fields[2], context + ": field 'start_s'");
    row.span.end_s = parse_double(fields[3], context + ": field 'end_s'");
    if (row.utterance_id.empty() || row.span.label.empty()) {
      throw Error(StatusCode::kParseError, context + ": empty field");
    }
    if (!rows.empty()) {
      const AlignmentRow& prev = rows.back();
      if (row.utterance_id < prev.utterance_id ||
          (row.utterance_id == prev.utterance_id &&
           row.span.start_s < prev.span.start_s)) {
        throw Error(StatusCode::kParseError,
                    context + ": rows not sorted by (utterance_id, start_s)");
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<PhonemeAlignment> group_alignments(
    const std::vector<AlignmentRow>& rows) {
  std::vector<PhonemeAlignment> alignments;
  for (const AlignmentRow& row : rows) {
    if (alignments.empty() ||
        alignments.back().utterance_id != row.utterance_id) {
      alignments.push_back(PhonemeAlignment{row.utterance_id, {}});
    }
    alignments.back().phonemes.push_back(row.span);
  }
  for (const PhonemeAlignment& alignment : alignments) {
    validate_alignment(alignment);
  }
  return alignments;
}

}  // namespace

std::vector<PhonemeAlignment> load_alignments(const std::string& path) {
  return group_alignments(load_alignment_rows(path));
}

std::vector<UtteranceRecord> load_dataset(const std::string& features_path,
                                          const std::string& alignments_path) {
  std::vector<PhonemeAlignment> alignments = load_alignments(alignments_path);
  std::map<std::string, const PhonemeAlignment*> by_id;
  for (const PhonemeAlignment& alignment : alignments) {
    if (!by_id.emplace(alignment.utterance_id, &alignment).second) {
      throw Error(StatusCode::kParseError,
                  alignments_path + ": duplicate utterance '" +
                      alignment.utterance_id + "'");
    }
  }

  std::ifstream in = open_input(features_path);
  std::vector<UtteranceRecord> records;
  std::map<std::string, size_t> seen_ids;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string context = location(features_path, line_no);
    UtteranceRecord record = parse_features_line(line, context);
    if (!seen_ids.emplace(record.utterance_id, line_no).second) {
      throw Error(StatusCode::kParseError,
                  context + ": duplicate utterance '" + record.utterance_id +
                      "'");
    }
    auto it = by_id.find(record.utterance_id);
    if (it == by_id.end()) {
      throw Error(StatusCode::kInvalidArgument,
                  context + ": no alignment for utterance '" +
                      record.utterance_id + "'");
    }
    record.alignment = *it->second;
    by_id.erase(it);
    try {
      validate_record(record);
    } catch (const Error& e) {
      throw Error(e.code(), context + ": " + e.what());
    }
    records.push_back(std::move(record));
  }
  if (!by_id.empty()) {
    throw Error(StatusCode::kInvalidArgument,
                alignments_path + ": alignment for unknown utterance '" +
                    by_id.begin()->first + "'");
  }
  if (records.empty()) {
    throw Error(StatusCode::kInvalidArgument,
                features_path + ": dataset is empty");
  }
  dataset_dim(records);  // enforce one shared dimension
  return records;
}

size_t dataset_dim(std::span<const UtteranceRecord> records) {
  if (records.empty()) {
    throw Error(StatusCode::kInvalidArgument, "dataset is empty");
  }
  const size_t dim = records.front().utterance_features.dim();
  for (const UtteranceRecord& record : records) {
    if (record.utterance_features.dim() != dim) {
      throw Error(StatusCode::kDimMismatch,
                  "dim mismatch across records: utterance '" +
                      record.utterance_id + "' has dim " +
                      std::to_string(record.utterance_features.dim()) +
                      ", expected " + std::to_string(dim));
    }
  }
  return dim;
}

void save_dataset(std::span<const UtteranceRecord> records,
                  const std::string& features_path,
                  const std::string& alignments_path) {
  for (const UtteranceRecord& record : records) {
    validate_record(record);
  }
  {
    std::ofstream out = open_output(features_path);
    for (const UtteranceRecord& record : records) {
      ordered_json object;
      object["utterance_id"] = record.utterance_id;
      object["category"] = category_name(record.category);
      object["utterance_features"] = record.utterance_features.values;
      ordered_json fragments = ordered_json::array();
      for (const FeatureVector& fragment : record.fragment_features) {
        fragments.push_back(fragment.values);
      }
      object["fragment_features"] = std::move(fragments);
      out << object.dump() << "\n";
    }
  }
  std::vector<const UtteranceRecord*> sorted;
  for (const UtteranceRecord& record : records) sorted.push_back(&record);
  std::sort(sorted.begin(), sorted.end(),
            [](const UtteranceRecord* a, const UtteranceRecord* b) {
              return a->utterance_id < b->utterance_id;
            });
  std::ofstream out = open_output(alignments_path);
  out << "utterance_id,phoneme,start_s,end_s\n";
  for (const UtteranceRecord* record : sorted) {
    check_csv_token(record->utterance_id, "utterance_id");
    for (const PhonemeSpan& span : record->alignment.phonemes) {
      check_csv_token(span.label, "phoneme label");
      out << record->utterance_id << ',' << span.label << ','
          << format_double(span.start_s) << ',' << format_double(span.end_s)
          << "\n";
    }
  }
}

std::vector<StrengthCurve> load_curves_csv(const std::string& path,
                                           EmotionCategory category) {
  std::ifstream in = open_input(path);
  std::string line;
  size_t line_no = 1;
  if (!std::getline(in, line) || line != "utterance_id,index,phoneme,strength") {
    throw Error(StatusCode::kParseError,
                location(path, 1) +
                    ": expected header 'utterance_id,index,phoneme,strength'");
  }
  std::vector<StrengthCurve> curves;
  std::map<std::string, size_t> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string context = location(path, line_no);
    auto fields = split(line, ',');
    if (fields.size() != 4) {
      throw Error(StatusCode::kParseError,
                  context + ": expected 4 fields, got " +
                      std::to_string(fields.size()));
    }
    std::string utterance_id(fields[0]);
    long index = parse_long(fields[1], context + ": field 'index'");
    std::string phoneme(fields[2]);
    double strength = parse_double(fields[3], context + ": field 'strength'");

    if (curves.empty() || curves.back().utterance_id != utterance_id) {
      if (seen.count(utterance_id)) {
        throw Error(StatusCode::kParseError,
                    context + ": utterance '" + utterance_id +
                        "' split across non-adjacent blocks");
      }
      seen[utterance_id] = line_no;
      curves.push_back(StrengthCurve{utterance_id, category, {}, {}});
    }
    StrengthCurve& curve = curves.back();
    if (static_cast<size_t>(index) != curve.strengths.size() || index < 0) {
      throw Error(StatusCode::kParseError,
                  context + ": expected index " +
                      std::to_string(curve.strengths.size()) + ", got " +
                      std::to_string(index));
    }
    curve.phoneme_labels.push_back(std::move(phoneme));
    curve.strengths.push_back(strength);
  }
  for (const StrengthCurve& curve : curves) {
    validate_curve(curve);
  }
  return curves;
}

void write_curves_csv(const std::string& path,
                      std::span<const StrengthCurve> curves) {
  for (const StrengthCurve& curve : curves) {
    validate_curve(curve);
  }
  std::ofstream out = open_output(path);
  out << "utterance_id,index,phoneme,strength\n";
  for (const StrengthCurve& curve : curves) {
    check_csv_token(curve.utterance_id, "utterance_id");
    for (size_t k = 0; k < curve.strengths.size(); ++k) {
      check_csv_token(curve.phoneme_labels[k], "phoneme label");
      out << curve.utterance_id << ',' << k << ',' << curve.phoneme_labels[k]
          << ',' << format_double(curve.strengths[k]) << "\n";
    }
  }
}

}  // namespace emorank
