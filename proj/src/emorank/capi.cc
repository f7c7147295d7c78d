// emorank/capi.cc

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

#include "emorank/emorank.h"

#include <algorithm>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "emorank/constraints.h"
#include "emorank/dataset_io.h"
#include "emorank/eval.h"
#include "emorank/fixtures.h"
#include "emorank/predictor.h"
#include "emorank/ranker.h"
#include "emorank/strength.h"
#include "emorank/types.h"

#ifndef EMORANK_VERSION_STRING
#define EMORANK_VERSION_STRING "0.0.0"
#endif

struct emorank_dataset {
  std::vector<emorank::UtteranceRecord> records;
};

struct emorank_alignments {
  std::vector<emorank::PhonemeAlignment> alignments;
};

struct emorank_ranker {
  emorank::RankingModel model;
  emorank::FitReport report;
};

struct emorank_predictor {
  emorank::PredictorModel model;
};

struct emorank_frames {
  emorank::FrameSequence frames;
};

namespace {

thread_local std::string g_last_error;

emorank_status to_status(emorank::StatusCode code) {
  switch (code) {
    case emorank::StatusCode::kOk: return EMORANK_OK;
    case emorank::StatusCode::kIoError: return EMORANK_IO_ERROR;
    case emorank::StatusCode::kParseError: return EMORANK_PARSE_ERROR;
    case emorank::StatusCode::kInvalidArgument:
      return EMORANK_INVALID_ARGUMENT;
    case emorank::StatusCode::kDimMismatch: return EMORANK_DIM_MISMATCH;
    case emorank::StatusCode::kNotConverged: return EMORANK_NOT_CONVERGED;
    case emorank::StatusCode::kInternal: return EMORANK_INTERNAL_ERROR;
  }
  return EMORANK_INTERNAL_ERROR;
}

template <typename F>
emorank_status wrap(F&& body) {
  try {
    body();
    return EMORANK_OK;
  } catch (const emorank::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return EMORANK_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return EMORANK_INTERNAL_ERROR;
  }
}

void require(bool ok, const char* what) {
  if (!ok) {
    throw emorank::Error(emorank::StatusCode::kInvalidArgument,
                         std::string(what) + " must not be NULL");
  }
}

const emorank::NormalizationStats& stats_of(const emorank_ranker* ranker) {
  if (!ranker->model.normalization) {
    throw emorank::Error(emorank::StatusCode::kInvalidArgument,
                         "ranking model has no normalization statistics");
  }
  return *ranker->model.normalization;
}

const emorank::UtteranceRecord& record_of(const emorank_dataset* data,
                                          const char* utterance_id) {
  for (const emorank::UtteranceRecord& record : data->records) {
    if (record.utterance_id == utterance_id) return record;
  }
  throw emorank::Error(
      emorank::StatusCode::kInvalidArgument,
      "no utterance '" + std::string(utterance_id) + "' in dataset");
}

}  // namespace

extern "C" {

const char* emorank_version(void) { return EMORANK_VERSION_STRING; }

const char* emorank_status_name(emorank_status status) {
  switch (status) {
    case EMORANK_OK: return "ok";
    case EMORANK_IO_ERROR: return "io_error";
    case EMORANK_PARSE_ERROR: return "parse_error";
    case EMORANK_INVALID_ARGUMENT: return "invalid_argument";
    case EMORANK_DIM_MISMATCH: return "dim_mismatch";
    case EMORANK_NOT_CONVERGED: return "not_converged";
    case EMORANK_INTERNAL_ERROR: return "internal";
  }
  return "unknown";
}

const char* emorank_last_error(void) { return g_last_error.c_str(); }

emorank_status emorank_dataset_load(const char* features_path,
                                    const char* alignments_path,
                                    emorank_dataset** out) {
  return wrap([&] {
    require(features_path, "features_path");
    require(alignments_path, "alignments_path");
    require(out, "out");
    auto handle = std::make_unique<emorank_dataset>();
    handle->records = emorank::load_dataset(features_path, alignments_path);
    *out = handle.release();
  });
}

emorank_status emorank_dataset_save(const emorank_dataset* data,
                                    const char* features_path,
                                    const char* alignments_path) {
  return wrap([&] {
    require(data, "data");
    require(features_path, "features_path");
    require(alignments_path, "alignments_path");
    emorank::save_dataset(data->records, features_path, alignments_path);
  });
}

void emorank_dataset_free(emorank_dataset* data) { delete data; }

size_t emorank_dataset_size(const emorank_dataset* data) {
  return data ? data->records.size() : 0;
}

size_t emorank_dataset_dim(const emorank_dataset* data) {
  if (!data || data->records.empty()) return 0;
  return data->records.front().utterance_features.dim();
}

const char* emorank_dataset_utterance_id(const emorank_dataset* data,
                                         size_t index) {
  if (!data || index >= data->records.size()) return nullptr;
  return data->records[index].utterance_id.c_str();
}

const char* emorank_dataset_category(const emorank_dataset* data,
                                     size_t index) {
  if (!data || index >= data->records.size()) return nullptr;
  return emorank::category_name(data->records[index].category).data();
}

size_t emorank_dataset_num_phonemes(const emorank_dataset* data,
                                    size_t index) {
  if (!data || index >= data->records.size()) return 0;
  return data->records[index].fragment_features.size();
}

long emorank_dataset_find(const emorank_dataset* data,
                          const char* utterance_id) {
  if (!data || !utterance_id) return -1;
  for (size_t i = 0; i < data->records.size(); ++i) {
    if (data->records[i].utterance_id == utterance_id) {
      return static_cast<long>(i);
    }
  }
  return -1;
}

emorank_status emorank_alignments_load(const char* path,
                                       emorank_alignments** out) {
  return wrap([&] {
    require(path, "path");
    require(out, "out");
    auto handle = std::make_unique<emorank_alignments>();
    handle->alignments = emorank::load_alignments(path);
    *out = handle.release();
  });
}

void emorank_alignments_free(emorank_alignments* alignments) {
  delete alignments;
}

size_t emorank_alignments_size(const emorank_alignments* alignments) {
  return alignments ? alignments->alignments.size() : 0;
}

const char* emorank_alignments_utterance_id(
    const emorank_alignments* alignments, size_t index) {
  if (!alignments || index >= alignments->alignments.size()) return nullptr;
  return alignments->alignments[index].utterance_id.c_str();
}

long emorank_alignments_find(const emorank_alignments* alignments,
                             const char* utterance_id) {
  if (!alignments || !utterance_id) return -1;
  for (size_t i = 0; i < alignments->alignments.size(); ++i) {
    if (alignments->alignments[i].utterance_id == utterance_id) {
      return static_cast<long>(i);
    }
  }
  return -1;
}

size_t emorank_alignments_num_phonemes(const emorank_alignments* alignments,
                                       size_t index) {
  if (!alignments || index >= alignments->alignments.size()) return 0;
  return alignments->alignments[index].phonemes.size();
}

const char* emorank_alignments_phoneme(const emorank_alignments* alignments,
                                       size_t index, size_t position) {
  if (!alignments || index >= alignments->alignments.size()) return nullptr;
  const emorank::PhonemeAlignment& alignment = alignments->alignments[index];
  if (position >= alignment.phonemes.size()) return nullptr;
  return alignment.phonemes[position].label.c_str();
}

emorank_ranker_config emorank_ranker_config_default(void) {
  emorank::RankerConfig defaults;
  emorank_ranker_config config;
  config.c = defaults.c;
  config.max_newton_iters = defaults.max_newton_iters;
  config.grad_tol = defaults.grad_tol;
  config.armijo_c = defaults.armijo_c;
  config.armijo_shrink = defaults.armijo_shrink;
  config.ridge_eps = defaults.ridge_eps;
  config.standardize = defaults.standardize ? 1 : 0;
  config.max_pairs = 100000;
  config.seed = 0;
  return config;
}

emorank_status emorank_ranker_train(const emorank_dataset* data,
                                    const char* category,
                                    const emorank_ranker_config* config,
                                    emorank_ranker** out) {
  return wrap([&] {
    require(data, "data");
    require(category, "category");
    require(out, "out");
    emorank_ranker_config c =
        config ? *config : emorank_ranker_config_default();
    emorank::RankerConfig rc;
    rc.c = c.c;
    rc.max_newton_iters = c.max_newton_iters;
    rc.grad_tol = c.grad_tol;
    rc.armijo_c = c.armijo_c;
    rc.armijo_shrink = c.armijo_shrink;
    rc.ridge_eps = c.ridge_eps;
    rc.standardize = c.standardize != 0;

    emorank::EmotionCategory target = emorank::parse_category(category);
    emorank::PairConstraintSet constraints =
        emorank::build_constraints(data->records, target, c.max_pairs, c.seed);
    std::vector<emorank::FeatureVector> features;
    features.reserve(data->records.size());
    for (const emorank::UtteranceRecord& record : data->records) {
      features.push_back(record.utterance_features);
    }
    auto handle = std::make_unique<emorank_ranker>();
    handle->model = emorank::fit_ranker(features, constraints, rc, target,
                                        &handle->report);

    // Min-max statistics over every training fragment of the target
    // category, so extracted training curves span [0,1].
    std::vector<double> raw;
    for (const emorank::UtteranceRecord& record : data->records) {
      if (record.category != target) continue;
      for (const emorank::FeatureVector& fragment : record.fragment_features) {
        raw.push_back(emorank::score(handle->model, fragment.values));
      }
    }
    handle->model.normalization = emorank::fit_normalization(raw, target);
    *out = handle.release();
  });
}

emorank_status emorank_ranker_save(const emorank_ranker* ranker,
                                   const char* path) {
  return wrap([&] {
    require(ranker, "ranker");
    require(path, "path");
    emorank::save_ranking_model(ranker->model, path);
  });
}

emorank_status emorank_ranker_load(const char* path, emorank_ranker** out) {
  return wrap([&] {
    require(path, "path");
    require(out, "out");
    auto handle = std::make_unique<emorank_ranker>();
    handle->model = emorank::load_ranking_model(path);
    handle->report.converged =
        handle->model.final_grad_norm <= handle->model.config.grad_tol;
    *out = handle.release();
  });
}

void emorank_ranker_free(emorank_ranker* ranker) { delete ranker; }

size_t emorank_ranker_dim(const emorank_ranker* ranker) {
  return ranker ? ranker->model.w.size() : 0;
}

const char* emorank_ranker_category(const emorank_ranker* ranker) {
  if (!ranker) return nullptr;
  return emorank::category_name(ranker->model.category).data();
}

double emorank_ranker_objective(const emorank_ranker* ranker) {
  return ranker ? ranker->model.final_objective : 0.0;
}

double emorank_ranker_grad_norm(const emorank_ranker* ranker) {
  return ranker ? ranker->model.final_grad_norm : 0.0;
}

int emorank_ranker_converged(const emorank_ranker* ranker) {
  return ranker && ranker->report.converged ? 1 : 0;
}

emorank_status emorank_ranker_score(const emorank_ranker* ranker,
                                    const double* x, size_t dim,
                                    double* out_score) {
  return wrap([&] {
    require(ranker, "ranker");
    require(x, "x");
    require(out_score, "out_score");
    *out_score = emorank::score(ranker->model,
                                std::span<const double>(x, dim));
  });
}

int emorank_ranker_has_normalization(const emorank_ranker* ranker) {
  return ranker && ranker->model.normalization ? 1 : 0;
}

emorank_status emorank_ranker_normalization(const emorank_ranker* ranker,
                                            double* out_min, double* out_max) {
  return wrap([&] {
    require(ranker, "ranker");
    require(out_min, "out_min");
    require(out_max, "out_max");
    const emorank::NormalizationStats& stats = stats_of(ranker);
    *out_min = stats.min_raw;
    *out_max = stats.max_raw;
  });
}

emorank_status emorank_extract_curves(const emorank_ranker* ranker,
                                      const emorank_dataset* data,
                                      const char* category,
                                      const char* out_csv_path) {
  return wrap([&] {
    require(ranker, "ranker");
    require(data, "data");
    require(out_csv_path, "out_csv_path");
    const emorank::NormalizationStats& stats = stats_of(ranker);
    emorank::EmotionCategory filter =
        category ? emorank::parse_category(category) : ranker->model.category;
    std::vector<emorank::StrengthCurve> curves;
    for (const emorank::UtteranceRecord& record : data->records) {
      if (record.category != filter) continue;
      std::vector<double> raw =
          emorank::extract_raw_strengths(ranker->model, record);
      emorank::StrengthCurve curve;
      curve.utterance_id = record.utterance_id;
      curve.category = ranker->model.category;
      for (const emorank::PhonemeSpan& span : record.alignment.phonemes) {
        curve.phoneme_labels.push_back(span.label);
      }
      curve.strengths = emorank::normalize(raw, stats);
      curves.push_back(std::move(curve));
    }
    if (curves.empty()) {
      throw emorank::Error(
          emorank::StatusCode::kInvalidArgument,
          std::string("no utterances of category '") +
              emorank::category_name(filter).data() + "' in dataset");
    }
    std::sort(curves.begin(), curves.end(),
              [](const emorank::StrengthCurve& a,
                 const emorank::StrengthCurve& b) {
                return a.utterance_id < b.utterance_id;
              });
    emorank::write_curves_csv(out_csv_path, curves);
  });
}

emorank_status emorank_extract_utterance(const emorank_ranker* ranker,
                                         const emorank_dataset* data,
                                         const char* utterance_id,
                                         double* out_strengths, size_t cap,
                                         size_t* out_len) {
  return wrap([&] {
    require(ranker, "ranker");
    require(data, "data");
    require(utterance_id, "utterance_id");
    require(out_len, "out_len");
    const emorank::NormalizationStats& stats = stats_of(ranker);
    const emorank::UtteranceRecord& record = record_of(data, utterance_id);
    *out_len = record.fragment_features.size();
    if (!out_strengths) return;  // size query
    if (cap < record.fragment_features.size()) {
      throw emorank::Error(
          emorank::StatusCode::kInvalidArgument,
          "buffer holds " + std::to_string(cap) + " values but utterance '" +
              record.utterance_id + "' has " +
              std::to_string(record.fragment_features.size()) + " phonemes");
    }
    std::vector<double> raw =
        emorank::extract_raw_strengths(ranker->model, record);
    std::vector<double> normalized = emorank::normalize(raw, stats);
    std::copy(normalized.begin(), normalized.end(), out_strengths);
  });
}

emorank_status emorank_transfer(const emorank_ranker* ranker,
                                const emorank_dataset* data,
                                const char* reference_id, size_t n_target,
                                double* out_strengths) {
  return wrap([&] {
    require(ranker, "ranker");
    require(data, "data");
    require(reference_id, "reference_id");
    require(out_strengths, "out_strengths");
    const emorank::NormalizationStats& stats = stats_of(ranker);
    const emorank::UtteranceRecord& reference = record_of(data, reference_id);
    std::vector<std::string> labels;
    labels.reserve(n_target);
    for (size_t k = 0; k < n_target; ++k) {
      labels.push_back("p" + std::to_string(k));
    }
    emorank::StrengthCurve curve = emorank::transfer_strengths(
        ranker->model, stats, reference, labels);
    std::copy(curve.strengths.begin(), curve.strengths.end(), out_strengths);
  });
}

emorank_status emorank_resample_curve(const double* values, size_t len,
                                      double* out, size_t out_len) {
  return wrap([&] {
    require(values, "values");
    require(out, "out");
    std::vector<double> resampled = emorank::resample_curve(
        std::span<const double>(values, len), out_len);
    std::copy(resampled.begin(), resampled.end(), out);
  });
}

emorank_status emorank_validate_control(const double* values, size_t len,
                                        size_t n_phonemes) {
  return wrap([&] {
    require(values, "values");
    emorank::validate_control(std::span<const double>(values, len), n_phonemes,
                              "control", emorank::EmotionCategory::kNeutral);
  });
}

emorank_status emorank_curve_write_csv(const char* path,
                                       const char* utterance_id,
                                       const char* const* phonemes,
                                       const double* strengths, size_t n) {
  return wrap([&] {
    require(path, "path");
    require(utterance_id, "utterance_id");
    require(strengths, "strengths");
    emorank::StrengthCurve curve;
    curve.utterance_id = utterance_id;
    for (size_t k = 0; k < n; ++k) {
      curve.phoneme_labels.push_back(phonemes && phonemes[k]
                                         ? phonemes[k]
                                         : "p" + std::to_string(k));
      curve.strengths.push_back(strengths[k]);
    }
    emorank::write_curves_csv(path, std::span(&curve, 1));
  });
}

emorank_predictor_config emorank_predictor_config_default(void) {
  emorank::PredictorConfig defaults;
  emorank_predictor_config config;
  config.hidden_dim = defaults.hidden_dim;
  config.learning_rate = defaults.learning_rate;
  config.epochs = defaults.epochs;
  config.batch_size = defaults.batch_size;
  config.seed = defaults.seed;
  config.alpha = defaults.alpha;
  return config;
}

emorank_status emorank_predictor_train_csv(
    const char* curves_csv, const char* category,
    const emorank_predictor_config* config, const char* trace_csv,
    emorank_predictor** out) {
  return wrap([&] {
    require(curves_csv, "curves_csv");
    require(category, "category");
    require(out, "out");
    emorank_predictor_config c =
        config ? *config : emorank_predictor_config_default();
    emorank::EmotionCategory target = emorank::parse_category(category);
    std::vector<emorank::StrengthCurve> curves =
        emorank::load_curves_csv(curves_csv, target);
    emorank::PhonemeFeaturizer featurizer =
        emorank::featurizer_from_curves(curves);
    std::vector<emorank::TrainSample> samples =
        emorank::curve_training_samples(featurizer, curves);
    emorank::PredictorConfig pc;
    pc.input_dim = featurizer.input_dim();
    pc.hidden_dim = c.hidden_dim;
    pc.learning_rate = c.learning_rate;
    pc.epochs = c.epochs;
    pc.batch_size = c.batch_size;
    pc.seed = c.seed;
    pc.alpha = c.alpha;
    emorank::TrainTrace trace;
    auto handle = std::make_unique<emorank_predictor>();
    handle->model = emorank::train_predictor(samples, pc, featurizer, target,
                                             &trace);
    if (trace_csv) emorank::write_loss_trace_csv(trace_csv, trace);
    *out = handle.release();
  });
}

emorank_status emorank_predictor_save(const emorank_predictor* predictor,
                                      const char* path) {
  return wrap([&] {
    require(predictor, "predictor");
    require(path, "path");
    emorank::save_predictor_model(predictor->model, path);
  });
}

emorank_status emorank_predictor_load(const char* path,
                                      emorank_predictor** out) {
  return wrap([&] {
    require(path, "path");
    require(out, "out");
    auto handle = std::make_unique<emorank_predictor>();
    handle->model = emorank::load_predictor_model(path);
    *out = handle.release();
  });
}

void emorank_predictor_free(emorank_predictor* predictor) { delete predictor; }

const char* emorank_predictor_category(const emorank_predictor* predictor) {
  if (!predictor) return nullptr;
  return emorank::category_name(predictor->model.category).data();
}

size_t emorank_predictor_input_dim(const emorank_predictor* predictor) {
  return predictor ? predictor->model.input_dim : 0;
}

size_t emorank_predictor_hidden_dim(const emorank_predictor* predictor) {
  return predictor ? predictor->model.hidden_dim : 0;
}

emorank_status emorank_predictor_predict(const emorank_predictor* predictor,
                                         const char* const* phonemes, size_t n,
                                         double* out_strengths) {
  return wrap([&] {
    require(predictor, "predictor");
    require(phonemes, "phonemes");
    require(out_strengths, "out_strengths");
    if (n == 0) {
      throw emorank::Error(emorank::StatusCode::kInvalidArgument,
                           "no phonemes to predict");
    }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (size_t k = 0; k < n; ++k) {
      require(phonemes[k], "phonemes[k]");
      labels.emplace_back(phonemes[k]);
    }
    emorank::StrengthCurve curve =
        emorank::predict_curve(predictor->model, labels, "query");
    std::copy(curve.strengths.begin(), curve.strengths.end(), out_strengths);
  });
}

emorank_status emorank_predictor_predict_csv(
    const emorank_predictor* predictor, const char* alignments_csv,
    const char* out_csv_path) {
  return wrap([&] {
    require(predictor, "predictor");
    require(alignments_csv, "alignments_csv");
    require(out_csv_path, "out_csv_path");
    std::vector<emorank::PhonemeAlignment> alignments =
        emorank::load_alignments(alignments_csv);
    std::vector<emorank::StrengthCurve> curves;
    curves.reserve(alignments.size());
    for (const emorank::PhonemeAlignment& alignment : alignments) {
      std::vector<std::string> labels;
      labels.reserve(alignment.phonemes.size());
      for (const emorank::PhonemeSpan& span : alignment.phonemes) {
        labels.push_back(span.label);
      }
      curves.push_back(emorank::predict_curve(predictor->model, labels,
                                              alignment.utterance_id));
    }
    emorank::write_curves_csv(out_csv_path, curves);
  });
}

emorank_status emorank_l1_loss(const double* pred, const double* target,
                               size_t n, double* out) {
  return wrap([&] {
    require(pred, "pred");
    require(target, "target");
    require(out, "out");
    *out = emorank::l1_strength_loss(std::span<const double>(pred, n),
                                     std::span<const double>(target, n));
  });
}

emorank_status emorank_composite_loss(double mel_loss, double strength_loss,
                                      double alpha, double* out) {
  return wrap([&] {
    require(out, "out");
    *out = emorank::composite_loss(mel_loss, strength_loss, alpha);
  });
}

emorank_status emorank_frames_load(const char* path, emorank_frames** out) {
  return wrap([&] {
    require(path, "path");
    require(out, "out");
    auto handle = std::make_unique<emorank_frames>();
    handle->frames = emorank::load_frames_csv(path);
    *out = handle.release();
  });
}

void emorank_frames_free(emorank_frames* frames) { delete frames; }

size_t emorank_frames_len(const emorank_frames* frames) {
  return frames ? frames->frames.size() : 0;
}

size_t emorank_frames_dim(const emorank_frames* frames) {
  return frames ? frames->frames.dim : 0;
}

emorank_status emorank_evaluate_mcd(const emorank_frames* pred,
                                    const emorank_frames* target,
                                    double* out_mcd) {
  return wrap([&] {
    require(pred, "pred");
    require(target, "target");
    require(out_mcd, "out_mcd");
    *out_mcd = emorank::evaluate_mcd(pred->frames, target->frames);
  });
}

emorank_status emorank_evaluate_mcd_ex(const emorank_frames* pred,
                                       const emorank_frames* target,
                                       const char* metric, int skip_c0,
                                       size_t band, double* out_mcd,
                                       double* out_dtw_cost,
                                       size_t* out_path_len) {
  return wrap([&] {
    require(pred, "pred");
    require(target, "target");
    require(out_mcd, "out_mcd");
    emorank::LocalCost cost = metric ? emorank::parse_local_cost(metric)
                                     : emorank::LocalCost::kEuclidean;
    emorank::DtwResult aligned =
        emorank::dtw(pred->frames, target->frames, cost, band);
    emorank::McdOptions options;
    options.skip_c0 = skip_c0 != 0;
    *out_mcd = emorank::mcd(pred->frames, target->frames, aligned.path,
                            options);
    if (out_dtw_cost) *out_dtw_cost = aligned.total_cost;
    if (out_path_len) *out_path_len = aligned.path.pairs.size();
  });
}

emorank_status emorank_evaluate_files(const char* pred_csv,
                                      const char* target_csv,
                                      double* out_mcd) {
  return wrap([&] {
    require(pred_csv, "pred_csv");
    require(target_csv, "target_csv");
    require(out_mcd, "out_mcd");
    emorank::FrameSequence pred = emorank::load_frames_csv(pred_csv);
    emorank::FrameSequence target = emorank::load_frames_csv(target_csv);
    *out_mcd = emorank::evaluate_mcd(pred, target);
  });
}

emorank_fixture_config emorank_fixture_config_default(void) {
  emorank::FixtureConfig defaults;
  emorank_fixture_config config;
  config.seed = defaults.seed;
  config.dim = defaults.dim;
  config.n_train = defaults.n_train;
  config.n_holdout = defaults.n_holdout;
  config.min_phonemes = defaults.min_phonemes;
  config.max_phonemes = defaults.max_phonemes;
  config.separation = defaults.separation;
  config.noise = defaults.noise;
  config.eval_frames = defaults.eval_frames;
  config.eval_dim = defaults.eval_dim;
  return config;
}

emorank_status emorank_gen_fixtures(const char* out_dir,
                                    const emorank_fixture_config* config) {
  return wrap([&] {
    require(out_dir, "out_dir");
    emorank_fixture_config c =
        config ? *config : emorank_fixture_config_default();
    emorank::FixtureConfig fc;
    fc.out_dir = out_dir;
    fc.seed = c.seed;
    fc.dim = c.dim;
    fc.n_train = c.n_train;
    fc.n_holdout = c.n_holdout;
    fc.min_phonemes = c.min_phonemes;
    fc.max_phonemes = c.max_phonemes;
    fc.separation = c.separation;
    fc.noise = c.noise;
    fc.eval_frames = c.eval_frames;
    fc.eval_dim = c.eval_dim;
    emorank::gen_fixtures(fc);
  });
}

}  // extern "C"
