// tools/emorank_main.cc

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

// emorank command line. Pipeline: gen-fixtures -> train-ranker -> extract ->
// transfer/control -> train-predictor -> predict -> evaluate. Talks to the
// library exclusively through the public C API; exit codes are 0 (success),
// 2 (usage error) and 1 (runtime error).

#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "emorank/emorank.h"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

enum class LogLevel { kDebug = 0, kInfo = 1, kWarn = 2, kError = 3 };

struct Globals {
  uint64_t seed = 0;
  std::string out_dir = ".";
  LogLevel log_level = LogLevel::kInfo;
  bool json = false;
};

Globals g;

void log_at(LogLevel level, const char* tag, const std::string& msg) {
  if (g.log_level <= level) std::cerr << "[" << tag << "] " << msg << "\n";
}
void log_info(const std::string& msg) { log_at(LogLevel::kInfo, "info", msg); }

// Library failures surface as runtime_error -> exit code 1.
void check(emorank_status status) {
  if (status != EMORANK_OK) throw std::runtime_error(emorank_last_error());
}

struct DatasetDeleter {
  void operator()(emorank_dataset* p) const { emorank_dataset_free(p); }
};
struct AlignmentsDeleter {
  void operator()(emorank_alignments* p) const { emorank_alignments_free(p); }
};
struct RankerDeleter {
  void operator()(emorank_ranker* p) const { emorank_ranker_free(p); }
};
struct PredictorDeleter {
  void operator()(emorank_predictor* p) const { emorank_predictor_free(p); }
};
struct FramesDeleter {
  void operator()(emorank_frames* p) const { emorank_frames_free(p); }
};

using DatasetHandle = std::unique_ptr<emorank_dataset, DatasetDeleter>;
using AlignmentsHandle = std::unique_ptr<emorank_alignments, AlignmentsDeleter>;
using RankerHandle = std::unique_ptr<emorank_ranker, RankerDeleter>;
using PredictorHandle = std::unique_ptr<emorank_predictor, PredictorDeleter>;
using FramesHandle = std::unique_ptr<emorank_frames, FramesDeleter>;

DatasetHandle load_dataset(const std::string& features,
                           const std::string& alignments) {
  emorank_dataset* raw = nullptr;
  check(emorank_dataset_load(features.c_str(), alignments.c_str(), &raw));
  DatasetHandle data(raw);
  log_info("loaded " + std::to_string(emorank_dataset_size(data.get())) +
           " utterances (dim " +
           std::to_string(emorank_dataset_dim(data.get())) + ")");
  return data;
}

RankerHandle load_ranker(const std::string& path) {
  emorank_ranker* raw = nullptr;
  check(emorank_ranker_load(path.c_str(), &raw));
  return RankerHandle(raw);
}

// Relative output paths land under --out-dir.
std::string join_out(const std::string& path) {
  if (g.out_dir.empty() || g.out_dir == "." || path.empty() ||
      path.front() == '/') {
    return path;
  }
  return g.out_dir + "/" + path;
}

std::vector<double> parse_strengths(const std::string& csv) {
  std::vector<double> values;
  size_t start = 0;
  while (start <= csv.size()) {
    size_t pos = csv.find(',', start);
    std::string token = csv.substr(
        start, pos == std::string::npos ? std::string::npos : pos - start);
    try {
      size_t used = 0;
      values.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw std::runtime_error("bad strength value '" + token + "'");
    }
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return values;
}

// --target-phonemes takes either a comma-separated label list or a bare
// count (labels then default to p0..p{N-1}).
std::vector<std::string> parse_target_phonemes(const std::string& arg) {
  bool all_digits = !arg.empty();
  for (char c : arg) {
    if (c < '0' || c > '9') {
      all_digits = false;
      break;
    }
  }
  std::vector<std::string> labels;
  if (all_digits) {
    size_t n = std::stoul(arg);
    for (size_t k = 0; k < n; ++k) labels.push_back("p" + std::to_string(k));
    return labels;
  }
  size_t start = 0;
  while (start <= arg.size()) {
    size_t pos = arg.find(',', start);
    std::string token = arg.substr(
        start, pos == std::string::npos ? std::string::npos : pos - start);
    if (token.empty()) {
      throw std::runtime_error("empty phoneme label in --target-phonemes");
    }
    labels.push_back(token);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return labels;
}

void emit(const ordered_json& machine, const std::string& human) {
  if (g.json) {
    std::cout << machine.dump() << "\n";
  } else {
    std::cout << human;
  }
}

// ---- gen-fixtures --------------------------------------------------------

struct GenFixturesArgs {
  emorank_fixture_config config = emorank_fixture_config_default();
};

void cmd_gen_fixtures(const GenFixturesArgs& args) {
  emorank_fixture_config config = args.config;
  config.seed = g.seed;
  const std::string& dir = g.out_dir;
  check(emorank_gen_fixtures(dir.c_str(), &config));
  std::vector<std::string> files = {
      "train_features.jsonl", "train_alignments.csv",
      "holdout_features.jsonl", "holdout_alignments.csv",
      "eval_pred.csv", "eval_target.csv"};
  ordered_json out;
  out["out_dir"] = dir;
  out["seed"] = config.seed;
  out["files"] = files;
  std::string human;
  for (const std::string& f : files) human += dir + "/" + f + "\n";
  emit(out, human);
}

// ---- train-ranker --------------------------------------------------------

struct TrainRankerArgs {
  std::string features;
  std::string alignments;
  std::string category;
  std::string out;
  emorank_ranker_config config = emorank_ranker_config_default();
  bool standardize = false;
};

void cmd_train_ranker(const TrainRankerArgs& args) {
  DatasetHandle data = load_dataset(args.features, args.alignments);
  emorank_ranker_config config = args.config;
  config.standardize = args.standardize ? 1 : 0;
  config.seed = g.seed;
  emorank_ranker* raw = nullptr;
  check(emorank_ranker_train(data.get(), args.category.c_str(), &config,
                             &raw));
  RankerHandle ranker(raw);
  std::string out_path = join_out(args.out);
  check(emorank_ranker_save(ranker.get(), out_path.c_str()));

  double min_raw = 0.0;
  double max_raw = 0.0;
  check(emorank_ranker_normalization(ranker.get(), &min_raw, &max_raw));
  bool converged = emorank_ranker_converged(ranker.get()) != 0;
  if (!converged) {
    log_at(LogLevel::kWarn, "warn",
           "ranker did not reach the gradient tolerance");
  }
  ordered_json out;
  out["category"] = args.category;
  out["final_objective"] = emorank_ranker_objective(ranker.get());
  out["final_grad_norm"] = emorank_ranker_grad_norm(ranker.get());
  out["converged"] = converged;
  out["dim"] = emorank_ranker_dim(ranker.get());
  out["normalization"] = {{"min_raw", min_raw}, {"max_raw", max_raw}};
  out["model"] = out_path;
  char human[512];
  std::snprintf(human, sizeof(human),
                "category %s\nfinal_objective %.12g\nfinal_grad_norm %.12g\n"
                "converged %s\nmodel %s\n",
                args.category.c_str(),
                emorank_ranker_objective(ranker.get()),
                emorank_ranker_grad_norm(ranker.get()),
                converged ? "yes" : "no", out_path.c_str());
  emit(out, human);
}

// ---- extract -------------------------------------------------------------

struct ExtractArgs {
  std::string model;
  std::string features;
  std::string alignments;
  std::string category;  // empty: the model's category
  std::string out;
};

void cmd_extract(const ExtractArgs& args) {
  RankerHandle ranker = load_ranker(args.model);
  DatasetHandle data = load_dataset(args.features, args.alignments);
  const char* filter =
      args.category.empty() ? nullptr : args.category.c_str();
  std::string out_path = join_out(args.out);
  check(emorank_extract_curves(ranker.get(), data.get(), filter,
                               out_path.c_str()));
  std::string effective =
      args.category.empty() ? emorank_ranker_category(ranker.get())
                            : args.category;
  size_t n_curves = 0;
  for (size_t i = 0; i < emorank_dataset_size(data.get()); ++i) {
    if (effective == emorank_dataset_category(data.get(), i)) ++n_curves;
  }
  ordered_json out;
  out["category"] = effective;
  out["n_curves"] = n_curves;
  out["out"] = out_path;
  emit(out, "category " + effective + "\nn_curves " +
                std::to_string(n_curves) + "\nout " + out_path + "\n");
}

// ---- transfer ------------------------------------------------------------

struct TransferArgs {
  std::string model;
  std::string reference_features;
  std::string reference_alignments;
  std::string reference_id;
  std::string target_phonemes;
  std::string out;
};

void cmd_transfer(const TransferArgs& args) {
  RankerHandle ranker = load_ranker(args.model);
  DatasetHandle data =
      load_dataset(args.reference_features, args.reference_alignments);
  std::string reference_id = args.reference_id;
  if (reference_id.empty()) {
    if (emorank_dataset_size(data.get()) != 1) {
      throw std::runtime_error(
          "reference dataset has " +
          std::to_string(emorank_dataset_size(data.get())) +
          " utterances; pass --reference-id");
    }
    reference_id = emorank_dataset_utterance_id(data.get(), 0);
  }
  std::vector<std::string> labels = parse_target_phonemes(args.target_phonemes);
  std::vector<double> strengths(labels.size());
  check(emorank_transfer(ranker.get(), data.get(), reference_id.c_str(),
                         labels.size(), strengths.data()));
  std::vector<const char*> label_ptrs;
  for (const std::string& label : labels) label_ptrs.push_back(label.c_str());
  std::string out_path = join_out(args.out);
  check(emorank_curve_write_csv(out_path.c_str(), reference_id.c_str(),
                                label_ptrs.data(), strengths.data(),
                                strengths.size()));
  ordered_json out;
  out["reference_id"] = reference_id;
  out["n_target"] = labels.size();
  out["strengths"] = strengths;
  out["out"] = out_path;
  emit(out, "reference_id " + reference_id + "\nn_target " +
                std::to_string(labels.size()) + "\nout " + out_path + "\n");
}

// ---- control -------------------------------------------------------------

struct ControlArgs {
  std::string strengths;
  size_t n_phonemes = 0;
  std::string phonemes;  // optional comma-separated labels
  std::string id = "control";
  std::string out;
};

void cmd_control(const ControlArgs& args) {
  std::vector<double> values = parse_strengths(args.strengths);
  check(emorank_validate_control(values.data(), values.size(),
                                 args.n_phonemes));
  std::vector<std::string> labels;
  std::vector<const char*> label_ptrs;
  if (!args.phonemes.empty()) {
    labels = parse_target_phonemes(args.phonemes);
    if (labels.size() != args.n_phonemes) {
      throw std::runtime_error(
          "length mismatch: got " + std::to_string(labels.size()) +
          " phoneme labels for " + std::to_string(args.n_phonemes) +
          " phonemes");
    }
    for (const std::string& label : labels) {
      label_ptrs.push_back(label.c_str());
    }
  }
  std::string out_path = join_out(args.out);
  check(emorank_curve_write_csv(
      out_path.c_str(), args.id.c_str(),
      label_ptrs.empty() ? nullptr : label_ptrs.data(), values.data(),
      values.size()));
  ordered_json out;
  out["utterance_id"] = args.id;
  out["n_phonemes"] = args.n_phonemes;
  out["strengths"] = values;
  out["out"] = out_path;
  emit(out, "utterance_id " + args.id + "\nn_phonemes " +
                std::to_string(args.n_phonemes) + "\nout " + out_path + "\n");
}

// ---- train-predictor -----------------------------------------------------

struct TrainPredictorArgs {
  std::string curves;
  std::string category;
  std::string out;
  std::string trace;
  emorank_predictor_config config = emorank_predictor_config_default();
};

void cmd_train_predictor(const TrainPredictorArgs& args) {
  emorank_predictor_config config = args.config;
  config.seed = g.seed;
  std::string trace_path = join_out(args.trace);
  emorank_predictor* raw = nullptr;
  check(emorank_predictor_train_csv(
      args.curves.c_str(), args.category.c_str(), &config,
      trace_path.empty() ? nullptr : trace_path.c_str(), &raw));
  PredictorHandle predictor(raw);
  std::string out_path = join_out(args.out);
  check(emorank_predictor_save(predictor.get(), out_path.c_str()));
  ordered_json out;
  out["category"] = args.category;
  out["input_dim"] = emorank_predictor_input_dim(predictor.get());
  out["hidden_dim"] = emorank_predictor_hidden_dim(predictor.get());
  out["epochs"] = config.epochs;
  out["model"] = out_path;
  if (!trace_path.empty()) out["trace"] = trace_path;
  std::string human =
      "category " + args.category + "\ninput_dim " +
      std::to_string(emorank_predictor_input_dim(predictor.get())) +
      "\nhidden_dim " +
      std::to_string(emorank_predictor_hidden_dim(predictor.get())) +
      "\nmodel " + out_path + "\n";
  emit(out, human);
}

// ---- predict -------------------------------------------------------------

struct PredictArgs {
  std::string model;
  std::string alignments;
  std::string out;
};

void cmd_predict(const PredictArgs& args) {
  emorank_predictor* raw = nullptr;
  check(emorank_predictor_load(args.model.c_str(), &raw));
  PredictorHandle predictor(raw);
  emorank_alignments* raw_alignments = nullptr;
  check(emorank_alignments_load(args.alignments.c_str(), &raw_alignments));
  AlignmentsHandle alignments(raw_alignments);
  std::string out_path = join_out(args.out);
  check(emorank_predictor_predict_csv(predictor.get(), args.alignments.c_str(),
                                      out_path.c_str()));
  size_t n = emorank_alignments_size(alignments.get());
  ordered_json out;
  out["category"] = emorank_predictor_category(predictor.get());
  out["n_utterances"] = n;
  out["out"] = out_path;
  emit(out, "n_utterances " + std::to_string(n) + "\nout " + out_path + "\n");
}

// ---- evaluate ------------------------------------------------------------

struct EvaluateArgs {
  std::string pred;
  std::string target;
  std::string metric = "euclidean";
  size_t band = 0;
  bool include_c0 = false;
};

void cmd_evaluate(const EvaluateArgs& args) {
  emorank_frames* raw_pred = nullptr;
  check(emorank_frames_load(args.pred.c_str(), &raw_pred));
  FramesHandle pred(raw_pred);
  emorank_frames* raw_target = nullptr;
  check(emorank_frames_load(args.target.c_str(), &raw_target));
  FramesHandle target(raw_target);
  double mcd = 0.0;
  double dtw_cost = 0.0;
  size_t path_len = 0;
  check(emorank_evaluate_mcd_ex(pred.get(), target.get(),
                                args.metric.c_str(), args.include_c0 ? 0 : 1,
                                args.band, &mcd, &dtw_cost, &path_len));
  ordered_json out;
  out["mcd_db"] = mcd;
  out["dtw_cost"] = dtw_cost;
  out["path_len"] = path_len;
  out["pred_frames"] = emorank_frames_len(pred.get());
  out["target_frames"] = emorank_frames_len(target.get());
  char human[64];
  std::snprintf(human, sizeof(human), "%.3f\n", mcd);
  emit(out, human);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fine-grained emotion strength modeling for speech"};
  app.set_version_flag("--version", emorank_version());
  app.set_config("--config", "",
                 "Read flags from a TOML-like config file; command-line "
                 "flags win");
  app.require_subcommand(1);

  app.add_option("--seed", g.seed, "Seed for every random choice")
      ->capture_default_str();
  app.add_option("--out-dir", g.out_dir,
                 "Directory for relative output paths")
      ->capture_default_str();
  app.add_flag("--json", g.json, "Machine-readable stdout");
  std::map<std::string, LogLevel> levels{{"debug", LogLevel::kDebug},
                                         {"info", LogLevel::kInfo},
                                         {"warn", LogLevel::kWarn},
                                         {"error", LogLevel::kError}};
  app.add_option("--log-level", g.log_level, "debug|info|warn|error")
      ->transform(CLI::CheckedTransformer(levels, CLI::ignore_case))
      ->default_str("info");

  GenFixturesArgs gen_args;
  CLI::App* gen = app.add_subcommand(
      "gen-fixtures", "Write a synthetic corpus under --out-dir");
  gen->add_option("--dim", gen_args.config.dim, "Feature dimension")
      ->capture_default_str();
  gen->add_option("--n-train", gen_args.config.n_train,
                  "Training utterances per category")
      ->capture_default_str();
  gen->add_option("--n-holdout", gen_args.config.n_holdout,
                  "Holdout utterances per category")
      ->capture_default_str();
  gen->add_option("--min-phonemes", gen_args.config.min_phonemes,
                  "Minimum phonemes per utterance")
      ->capture_default_str();
  gen->add_option("--max-phonemes", gen_args.config.max_phonemes,
                  "Maximum phonemes per utterance")
      ->capture_default_str();
  gen->add_option("--separation", gen_args.config.separation,
                  "Emotional-direction scale")
      ->capture_default_str();
  gen->add_option("--noise", gen_args.config.noise, "Noise level")
      ->capture_default_str();
  gen->add_option("--eval-frames", gen_args.config.eval_frames,
                  "Frames in the synthetic cepstral pair")
      ->capture_default_str();
  gen->add_option("--eval-dim", gen_args.config.eval_dim,
                  "Cepstral coefficients per frame")
      ->capture_default_str();
  gen->callback([&] { cmd_gen_fixtures(gen_args); });

  TrainRankerArgs ranker_args;
  CLI::App* train_ranker = app.add_subcommand(
      "train-ranker", "Fit the ranking direction for one emotion category");
  train_ranker->add_option("--features", ranker_args.features,
                           "Features JSONL")->required();
  train_ranker->add_option("--alignments", ranker_args.alignments,
                           "Alignments CSV")->required();
  train_ranker->add_option("--category", ranker_args.category,
                           "Emotional category to rank")->required();
  train_ranker->add_option("--C,--c", ranker_args.config.c,
                           "Slack trade-off")->capture_default_str();
  train_ranker->add_option("--max-pairs", ranker_args.config.max_pairs,
                           "Cap per constraint set")->capture_default_str();
  train_ranker->add_option("--max-iters", ranker_args.config.max_newton_iters,
                           "Newton iteration cap")->capture_default_str();
  train_ranker->add_option("--grad-tol", ranker_args.config.grad_tol,
                           "Gradient norm tolerance")->capture_default_str();
  train_ranker->add_flag("--standardize", ranker_args.standardize,
                         "Z-score inputs before fitting");
  train_ranker->add_option("--out", ranker_args.out, "Model JSON path")
      ->required();
  train_ranker->callback([&] { cmd_train_ranker(ranker_args); });

  ExtractArgs extract_args;
  CLI::App* extract = app.add_subcommand(
      "extract", "Write per-phoneme strength curves for a dataset");
  extract->add_option("--model", extract_args.model, "Ranking model JSON")
      ->required();
  extract->add_option("--features", extract_args.features, "Features JSONL")
      ->required();
  extract->add_option("--alignments", extract_args.alignments,
                      "Alignments CSV")->required();
  extract->add_option("--category", extract_args.category,
                      "Category filter (default: the model's)");
  extract->add_option("--out", extract_args.out, "Curve CSV path")
      ->required();
  extract->callback([&] { cmd_extract(extract_args); });

  TransferArgs transfer_args;
  CLI::App* transfer = app.add_subcommand(
      "transfer", "Resample a reference utterance's curve onto new phonemes");
  transfer->add_option("--model", transfer_args.model, "Ranking model JSON")
      ->required();
  transfer->add_option("--reference-features",
                       transfer_args.reference_features,
                       "Reference features JSONL")->required();
  transfer->add_option("--reference-alignments",
                       transfer_args.reference_alignments,
                       "Reference alignments CSV")->required();
  transfer->add_option("--reference-id", transfer_args.reference_id,
                       "Reference utterance id (optional when unique)");
  transfer->add_option("--target-phonemes", transfer_args.target_phonemes,
                       "Comma-separated labels, or a bare count")->required();
  transfer->add_option("--out", transfer_args.out, "Curve CSV path")
      ->required();
  transfer->callback([&] { cmd_transfer(transfer_args); });

  ControlArgs control_args;
  CLI::App* control = app.add_subcommand(
      "control", "Validate a hand-designed strength curve and write it");
  control->add_option("--strengths", control_args.strengths,
                      "Comma-separated values in [0,1]")->required();
  control->add_option("--n-phonemes", control_args.n_phonemes,
                      "Expected phoneme count")->required();
  control->add_option("--phonemes", control_args.phonemes,
                      "Comma-separated labels (default p0..)");
  control->add_option("--id", control_args.id, "Utterance id for the output")
      ->capture_default_str();
  control->add_option("--out", control_args.out, "Curve CSV path")
      ->required();
  control->callback([&] { cmd_control(control_args); });

  TrainPredictorArgs predictor_args;
  CLI::App* train_predictor = app.add_subcommand(
      "train-predictor", "Train the phoneme-to-strength network");
  train_predictor->add_option("--curves", predictor_args.curves,
                              "Training curve CSV")->required();
  train_predictor->add_option("--category", predictor_args.category,
                              "Curve category")->required();
  train_predictor->add_option("--hidden-dim",
                              predictor_args.config.hidden_dim,
                              "Hidden units")->capture_default_str();
  train_predictor->add_option("--lr", predictor_args.config.learning_rate,
                              "Initial learning rate")->capture_default_str();
  train_predictor->add_option("--epochs", predictor_args.config.epochs,
                              "Training epochs")->capture_default_str();
  train_predictor->add_option("--batch-size",
                              predictor_args.config.batch_size,
                              "Mini-batch size")->capture_default_str();
  train_predictor->add_option("--alpha", predictor_args.config.alpha,
                              "Strength-loss weight")->capture_default_str();
  train_predictor->add_option("--trace", predictor_args.trace,
                              "Write an epoch,loss CSV here");
  train_predictor->add_option("--out", predictor_args.out,
                              "Model JSON path")->required();
  train_predictor->callback([&] { cmd_train_predictor(predictor_args); });

  PredictArgs predict_args;
  CLI::App* predict = app.add_subcommand(
      "predict", "Predict strength curves from alignments alone");
  predict->add_option("--model", predict_args.model, "Predictor model JSON")
      ->required();
  predict->add_option("--alignments", predict_args.alignments,
                      "Alignments CSV")->required();
  predict->add_option("--out", predict_args.out, "Curve CSV path")
      ->required();
  predict->callback([&] { cmd_predict(predict_args); });

  EvaluateArgs evaluate_args;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Mel-cepstral distortion between two frame CSVs");
  evaluate->add_option("--pred", evaluate_args.pred, "Predicted frames CSV")
      ->required();
  evaluate->add_option("--target", evaluate_args.target, "Target frames CSV")
      ->required();
  evaluate->add_option("--metric", evaluate_args.metric,
                       "euclidean|sqeuclidean|manhattan")
      ->capture_default_str();
  evaluate->add_option("--band", evaluate_args.band,
                       "Sakoe-Chiba band width (0: none)")
      ->capture_default_str();
  evaluate->add_flag("--include-c0", evaluate_args.include_c0,
                     "Keep the 0th coefficient in the distortion");
  evaluate->callback([&] { cmd_evaluate(evaluate_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
