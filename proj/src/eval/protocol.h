// eval/protocol.h

// Copyright 2026  artic authors

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

#ifndef ARTIC_EVAL_PROTOCOL_H_
#define ARTIC_EVAL_PROTOCOL_H_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "data/corpus.h"
#include "data/split.h"
#include "eval/score-report.h"
#include "model/blstm.h"
#include "model/trainer.h"
#include "model/window-model.h"
#include "vtv/prior-table.h"

namespace artic {

enum class ModelKind { kBlstm, kAe1, kAe2, kResDnn };
std::string ModelKindName(ModelKind kind);
ModelKind ParseModelKind(const std::string &name);

// Input feature menu for the sequence model.
enum class InputKind {
  kMfcc,
  kPhones,
  kLf,
  kSf,
  kMfccPhones,
  kMfccLf,
  kMfccSf,
};
std::string InputKindName(InputKind kind);
InputKind ParseInputKind(const std::string &name);

// Prior tables keyed by provenance label ("LF", "SF", "SF1", ...).
struct PriorTables {
  std::map<std::string, const PriorTable *> by_name;

  void Put(const PriorTable *table);  // keyed by table->provenance
  const PriorTable *Find(const std::string &name) const;
  const PriorTable &Require(const std::string &name) const;  // ConfigError
};

// A fully resolved experiment: model family, inputs, sizes, training
// schedule, and the seeds it is repeated with.
struct RunSpec {
  ModelKind model = ModelKind::kBlstm;
  InputKind input = InputKind::kMfcc;       // sequence-model input features
  std::string priors = "SF";                // weak-model prior provenance
  std::vector<std::string> train_speakers;  // empty: the plan's train set
  int context = 12;                         // window half-width T
  std::vector<int> encoder_widths = {200, 130, 70};
  std::vector<int> trunk_widths = {1000, 1000, 1000, 1000};
  int blstm_layers = 5;
  int blstm_hidden = 250;
  double lambda_z = 2.0;
  double lambda_x = 0.5;
  double lambda_w = 0.01;
  bool residual_per_component = false;
  bool ae2_average_windows = false;
  TrainerConfig trainer;  // seed is overwritten per run
  std::vector<uint64_t> seeds = {1, 2};
};

// Phone inventory used for one-hot encodings: the table's phones when
// given, otherwise all labels seen in the corpus; sorted either way.
std::vector<std::string> PhoneInventory(const Corpus &corpus,
                                        const PriorTable *table);

// Input matrix for one utterance under an input kind.  Prior-based inputs
// expand the frame phones through the matching table; one-hot encodings
// index into the sorted inventory (unknown phone raises DataError).
Tensor AssembleInput(const AlignedUtterance &utt, InputKind kind,
                     const PriorTables &tables,
                     const std::vector<std::string> &phone_inventory);

// Copies of the selected utterances with priors re-expanded through the
// given table (corpora are loaded once and rescored under many tables).
std::vector<AlignedUtterance> WithPriors(const Corpus &corpus,
                                         const std::vector<int> &utts,
                                         const PriorTable &table);

// Prior vectors compared directly against measured VTVs over the first
// six features.  RMSE is omitted for the expert ("LF") provenance.
ScoreReport ScoreBaseline(const Corpus &corpus, const std::vector<int> &utts,
                          const PriorTable &table);

// Builds an untrained weak model per the spec (window sizes and lambdas).
std::unique_ptr<WindowModel> BuildWeakModel(const RunSpec &spec, int obs_dim,
                                            uint64_t seed);

// Scores a trained weak model's generated articulatory vectors against the
// measured VTVs of the given utterances.
ScoreReport ScoreWeakModel(const WindowModel &model, const RunSpec &spec,
                           const std::vector<AlignedUtterance> &utts);

// Scores a trained sequence model on the given utterances.
ScoreReport ScoreBlstmModel(const BlstmModel &model, const RunSpec &spec,
                            const Corpus &corpus, const std::vector<int> &utts,
                            const PriorTables &tables,
                            const std::vector<std::string> &phone_inventory);

// One trained model of either family, plus everything needed to score it.
struct TrainedModel {
  std::unique_ptr<WindowModel> window;  // weak families
  std::unique_ptr<BlstmModel> blstm;    // sequence family
  TrainLog log;
  std::vector<std::string> phone_inventory;  // sequence input encoding

  ParameterSet &Params();
};

// Trains one model on the plan's train speakers (validation speakers drive
// early stopping; spec.train_speakers overrides the train set).  Scoring
// is separate, so corpora without articulatory tracks can still train
// weak models.
TrainedModel TrainOnce(const Corpus &corpus, const SplitPlan &plan,
                       const RunSpec &spec, const PriorTables &tables,
                       uint64_t seed);

struct ProtocolRun {
  uint64_t seed = 0;
  ScoreReport report;
  TrainLog log;
};

struct ProtocolResult {
  std::vector<ProtocolRun> runs;
  // Mean and sample standard deviation over seeds of the headline
  // feature-averaged metrics.
  double mean_r = 0.0, std_r = 0.0;
  double mean_rmse = 0.0, std_rmse = 0.0;
  bool has_rmse = false;

  std::string SummaryTsv() const;
  void SaveSummary(const std::string &path) const;
};

// Computes the summary statistics from the per-seed runs.
void FinalizeProtocolResult(ProtocolResult *result);

// Trains one model per seed on the plan's train speakers (early stopping
// on the plan's validation speakers) and scores the plan's test speakers.
ProtocolResult RunProtocol(const Corpus &corpus, const SplitPlan &plan,
                           const RunSpec &spec, const PriorTables &tables);

// Figure-style time series: frame index, then measured / prior /
// reconstructed columns per feature (1 + 3 * F columns per row).
void EmitPlotData(const Tensor &measured, const Tensor &prior,
                  const Tensor &reconstructed,
                  const std::vector<std::string> &feature_names,
                  const std::string &out_path);

}  // namespace artic

#endif  // ARTIC_EVAL_PROTOCOL_H_
