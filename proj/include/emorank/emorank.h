/* emorank/emorank.h */

/* Copyright 2026  The Emorank Authors */

/* Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

   THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
   KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
   WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
   MERCHANTABLITY OR NON-INFRINGEMENT.
   See the Apache 2 License for the specific language governing permissions and
   limitations under the License. */

/* C API for the emorank library: relative-attribute emotion-strength
   ranking, phoneme-level strength curves, a phoneme-to-strength predictor,
   and DTW/MCD evaluation.

   Conventions:
     - Functions that can fail return emorank_status; EMORANK_OK is 0.
     - On failure, emorank_last_error() returns a message describing the most
       recent failing call on the calling thread.
     - Objects created by *_load / *_train calls are released with the
       matching *_free; freeing NULL is a no-op.
     - Emotion categories are the strings: neutral, happy, angry, disgust,
       fear, surprise, sad. */

#ifndef EMORANK_EMORANK_H_
#define EMORANK_EMORANK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(EMORANK_BUILDING)
#define EMORANK_API __declspec(dllexport)
#else
#define EMORANK_API __declspec(dllimport)
#endif
#else
#define EMORANK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum emorank_status {
  EMORANK_OK = 0,
  EMORANK_IO_ERROR = 1,
  EMORANK_PARSE_ERROR = 2,
  EMORANK_INVALID_ARGUMENT = 3,
  EMORANK_DIM_MISMATCH = 4,
  EMORANK_NOT_CONVERGED = 5,
  EMORANK_INTERNAL_ERROR = 6
} emorank_status;

/* Opaque handles. */
typedef struct emorank_dataset emorank_dataset;
typedef struct emorank_alignments emorank_alignments;
typedef struct emorank_ranker emorank_ranker;
typedef struct emorank_predictor emorank_predictor;
typedef struct emorank_frames emorank_frames;

EMORANK_API const char* emorank_version(void);
EMORANK_API const char* emorank_status_name(emorank_status status);
/* Message of the most recent failing call on this thread; "" before any
   failure. The pointer stays valid until the next failing call. */
EMORANK_API const char* emorank_last_error(void);

/* ---- Datasets ----------------------------------------------------------
   features_path: JSON Lines, one utterance per line with keys utterance_id,
   category, utterance_features, fragment_features.
   alignments_path: CSV utterance_id,phoneme,start_s,end_s sorted by
   (utterance_id, start_s). */

EMORANK_API emorank_status emorank_dataset_load(const char* features_path,
                                                const char* alignments_path,
                                                emorank_dataset** out);
EMORANK_API emorank_status emorank_dataset_save(const emorank_dataset* data,
                                                const char* features_path,
                                                const char* alignments_path);
EMORANK_API void emorank_dataset_free(emorank_dataset* data);
EMORANK_API size_t emorank_dataset_size(const emorank_dataset* data);
EMORANK_API size_t emorank_dataset_dim(const emorank_dataset* data);
EMORANK_API const char* emorank_dataset_utterance_id(
    const emorank_dataset* data, size_t index);
EMORANK_API const char* emorank_dataset_category(const emorank_dataset* data,
                                                 size_t index);
EMORANK_API size_t emorank_dataset_num_phonemes(const emorank_dataset* data,
                                                size_t index);
/* Index of the utterance with this id, or -1 when absent. */
EMORANK_API long emorank_dataset_find(const emorank_dataset* data,
                                      const char* utterance_id);

/* Phoneme alignments alone, for prediction targets without features. */
EMORANK_API emorank_status emorank_alignments_load(const char* path,
                                                   emorank_alignments** out);
EMORANK_API void emorank_alignments_free(emorank_alignments* alignments);
EMORANK_API size_t emorank_alignments_size(
    const emorank_alignments* alignments);
EMORANK_API const char* emorank_alignments_utterance_id(
    const emorank_alignments* alignments, size_t index);
EMORANK_API long emorank_alignments_find(const emorank_alignments* alignments,
                                         const char* utterance_id);
EMORANK_API size_t emorank_alignments_num_phonemes(
    const emorank_alignments* alignments, size_t index);
EMORANK_API const char* emorank_alignments_phoneme(
    const emorank_alignments* alignments, size_t index, size_t position);

/* ---- Ranking ----------------------------------------------------------- */

typedef struct emorank_ranker_config {
  double c;             /* slack trade-off, > 0 */
  int max_newton_iters; /* > 0 */
  double grad_tol;      /* convergence threshold on |grad| */
  double armijo_c;      /* sufficient-decrease constant in (0,1) */
  double armijo_shrink; /* backtracking factor in (0,1) */
  double ridge_eps;     /* Hessian diagonal ridge, > 0 */
  int standardize;      /* nonzero: z-score inputs before fitting */
  size_t max_pairs;     /* cap per constraint set; sampled when exceeded */
  uint64_t seed;        /* drives the pair subsampling */
} emorank_ranker_config;

EMORANK_API emorank_ranker_config emorank_ranker_config_default(void);

/* Fits the ranking direction for one emotional category against the neutral
   utterances of the dataset, then fits min-max normalization statistics over
   the raw scores of that category's phoneme fragments. */
EMORANK_API emorank_status emorank_ranker_train(
    const emorank_dataset* data, const char* category,
    const emorank_ranker_config* config, emorank_ranker** out);
EMORANK_API emorank_status emorank_ranker_save(const emorank_ranker* ranker,
                                               const char* path);
EMORANK_API emorank_status emorank_ranker_load(const char* path,
                                               emorank_ranker** out);
EMORANK_API void emorank_ranker_free(emorank_ranker* ranker);
EMORANK_API size_t emorank_ranker_dim(const emorank_ranker* ranker);
EMORANK_API const char* emorank_ranker_category(const emorank_ranker* ranker);
EMORANK_API double emorank_ranker_objective(const emorank_ranker* ranker);
EMORANK_API double emorank_ranker_grad_norm(const emorank_ranker* ranker);
EMORANK_API int emorank_ranker_converged(const emorank_ranker* ranker);
/* Raw (un-normalized) ranking score of one feature vector. */
EMORANK_API emorank_status emorank_ranker_score(const emorank_ranker* ranker,
                                                const double* x, size_t dim,
                                                double* out_score);
EMORANK_API int emorank_ranker_has_normalization(const emorank_ranker* ranker);
EMORANK_API emorank_status emorank_ranker_normalization(
    const emorank_ranker* ranker, double* out_min, double* out_max);

/* ---- Strength curves ---------------------------------------------------
   Curve CSV format: utterance_id,index,phoneme,strength with index running
   0..n-1 inside each utterance block. */

/* Normalized per-phoneme strengths for every dataset utterance of the given
   category (NULL: the ranker's own category), written sorted by utterance
   id. The ranker must carry normalization statistics. */
EMORANK_API emorank_status emorank_extract_curves(const emorank_ranker* ranker,
                                                  const emorank_dataset* data,
                                                  const char* category,
                                                  const char* out_csv_path);
/* Normalized strengths of one utterance. cap is the capacity of
   out_strengths and must be at least the utterance's phoneme count;
   *out_len receives that count. */
EMORANK_API emorank_status emorank_extract_utterance(
    const emorank_ranker* ranker, const emorank_dataset* data,
    const char* utterance_id, double* out_strengths, size_t cap,
    size_t* out_len);
/* Extracts the reference utterance's curve and resamples it onto n_target
   phonemes. out_strengths must hold n_target values. */
EMORANK_API emorank_status emorank_transfer(const emorank_ranker* ranker,
                                            const emorank_dataset* data,
                                            const char* reference_id,
                                            size_t n_target,
                                            double* out_strengths);
/* Piecewise-linear resampling of an arbitrary curve. */
EMORANK_API emorank_status emorank_resample_curve(const double* values,
                                                  size_t len, double* out,
                                                  size_t out_len);
/* Accepts a manually designed curve iff it has n_phonemes values in [0,1]. */
EMORANK_API emorank_status emorank_validate_control(const double* values,
                                                    size_t len,
                                                    size_t n_phonemes);
/* Writes a single curve. phonemes may be NULL (labels default to p0..). */
EMORANK_API emorank_status emorank_curve_write_csv(const char* path,
                                                   const char* utterance_id,
                                                   const char* const* phonemes,
                                                   const double* strengths,
                                                   size_t n);

/* ---- Strength predictor ------------------------------------------------ */

typedef struct emorank_predictor_config {
  size_t hidden_dim;    /* > 0 */
  double learning_rate; /* > 0 */
  size_t epochs;        /* > 0 */
  size_t batch_size;    /* > 0 */
  uint64_t seed;        /* init and shuffling */
  double alpha;         /* strength-loss weight in the composite loss */
} emorank_predictor_config;

EMORANK_API emorank_predictor_config emorank_predictor_config_default(void);

/* Trains the two-layer phoneme-to-strength network on a curve CSV. The
   phoneme inventory (and so the input dimension) is taken from the curves.
   trace_csv, when non-NULL, receives an epoch,loss training trace. */
EMORANK_API emorank_status emorank_predictor_train_csv(
    const char* curves_csv, const char* category,
    const emorank_predictor_config* config, const char* trace_csv,
    emorank_predictor** out);
EMORANK_API emorank_status emorank_predictor_save(
    const emorank_predictor* predictor, const char* path);
EMORANK_API emorank_status emorank_predictor_load(const char* path,
                                                  emorank_predictor** out);
EMORANK_API void emorank_predictor_free(emorank_predictor* predictor);
EMORANK_API const char* emorank_predictor_category(
    const emorank_predictor* predictor);
EMORANK_API size_t emorank_predictor_input_dim(
    const emorank_predictor* predictor);
EMORANK_API size_t emorank_predictor_hidden_dim(
    const emorank_predictor* predictor);
/* Predicted strengths, clamped to [0,1], for one phoneme sequence.
   out_strengths must hold n values. */
EMORANK_API emorank_status emorank_predictor_predict(
    const emorank_predictor* predictor, const char* const* phonemes, size_t n,
    double* out_strengths);
/* Predicts a curve for every utterance of an alignments CSV and writes them
   as a curve CSV in the input's utterance order. */
EMORANK_API emorank_status emorank_predictor_predict_csv(
    const emorank_predictor* predictor, const char* alignments_csv,
    const char* out_csv_path);

EMORANK_API emorank_status emorank_l1_loss(const double* pred,
                                           const double* target, size_t n,
                                           double* out);
EMORANK_API emorank_status emorank_composite_loss(double mel_loss,
                                                  double strength_loss,
                                                  double alpha, double* out);

/* ---- Evaluation --------------------------------------------------------
   Frame CSV format: header c0,..,c{D-1}, one frame per row. */

EMORANK_API emorank_status emorank_frames_load(const char* path,
                                               emorank_frames** out);
EMORANK_API void emorank_frames_free(emorank_frames* frames);
EMORANK_API size_t emorank_frames_len(const emorank_frames* frames);
EMORANK_API size_t emorank_frames_dim(const emorank_frames* frames);

/* Mel-cepstral distortion in dB over the Euclidean DTW alignment, skipping
   the 0th coefficient. */
EMORANK_API emorank_status emorank_evaluate_mcd(const emorank_frames* pred,
                                                const emorank_frames* target,
                                                double* out_mcd);
/* metric: euclidean | sqeuclidean | manhattan, for the DTW alignment.
   band > 0 restricts DTW to |i-j| <= band. out_dtw_cost and out_path_len may
   be NULL. */
EMORANK_API emorank_status emorank_evaluate_mcd_ex(
    const emorank_frames* pred, const emorank_frames* target,
    const char* metric, int skip_c0, size_t band, double* out_mcd,
    double* out_dtw_cost, size_t* out_path_len);
EMORANK_API emorank_status emorank_evaluate_files(const char* pred_csv,
                                                  const char* target_csv,
                                                  double* out_mcd);

/* ---- Synthetic fixtures ------------------------------------------------ */

typedef struct emorank_fixture_config {
  uint64_t seed;
  size_t dim;
  size_t n_train;   /* utterances per category */
  size_t n_holdout; /* utterances per category */
  size_t min_phonemes;
  size_t max_phonemes;
  double separation;
  double noise;
  size_t eval_frames;
  size_t eval_dim;
} emorank_fixture_config;

EMORANK_API emorank_fixture_config emorank_fixture_config_default(void);

/* Writes train_features.jsonl, train_alignments.csv, holdout_features.jsonl,
   holdout_alignments.csv, eval_pred.csv and eval_target.csv under out_dir.
   config may be NULL for the defaults. */
EMORANK_API emorank_status emorank_gen_fixtures(
    const char* out_dir, const emorank_fixture_config* config);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EMORANK_EMORANK_H_ */
