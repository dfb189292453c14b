// model/trainer.cc

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

#include "model/trainer.h"

#include <algorithm>
#include <limits>

#include "base/error.h"
#include "base/rng.h"
#include "model/losses.h"

namespace artic {

namespace {

void ValidateTrainerConfig(const TrainerConfig &cfg) {
  if (cfg.max_epochs < 1) throw ConfigError("trainer: max_epochs must be >= 1");
  if (cfg.batch_size < 1) throw ConfigError("trainer: batch_size must be >= 1");
  if (cfg.patience < 1) throw ConfigError("trainer: patience must be >= 1");
  if (cfg.holdout_fraction <= 0.0 || cfg.holdout_fraction >= 1.0)
    throw ConfigError("trainer: holdout_fraction must be in (0, 1)");
}

// Tracks the best monitor value and keeps a copy of the parameters.
struct BestSnapshot {
  double monitor = std::numeric_limits<double>::infinity();
  int epoch = -1;
  ParameterSet params;

  bool Offer(double value, int e, const ParameterSet &current) {
    if (!(value < monitor)) return false;  // also rejects NaN
    monitor = value;
    epoch = e;
    params = current;
    return true;
  }
};

double MonitorWindowModel(const WindowModel &model,
                          const std::vector<FramePair> &pairs,
                          int batch_size) {
  double weighted = 0.0;
  int64_t rows = 0;
  for (size_t i = 0; i < pairs.size(); i += batch_size) {
    size_t end = std::min(pairs.size(), i + batch_size);
    std::vector<FramePair> chunk(pairs.begin() + i, pairs.begin() + end);
    WindowBatch batch = AssembleWindowBatch(chunk, model.Context());
    weighted += model.MonitorError(batch) * batch.Rows();
    rows += batch.Rows();
  }
  return weighted / static_cast<double>(rows);
}

}  // namespace

TrainLog TrainWindowModel(WindowModel *model,
                          const std::vector<const AlignedUtterance *> &train,
                          const std::vector<const AlignedUtterance *> &valid,
                          const TrainerConfig &cfg) {
  ValidateTrainerConfig(cfg);
  std::vector<FramePair> train_pairs = CollectFramePairs(train);
  std::vector<FramePair> monitor_pairs = CollectFramePairs(valid);
  if (monitor_pairs.empty()) {
    // Deterministic held-out slice of the training frames.
    Rng rng(MixSeed(cfg.seed, "holdout"));
    rng.Shuffle(train_pairs);
    size_t held = std::max<size_t>(
        1, static_cast<size_t>(cfg.holdout_fraction * train_pairs.size()));
    if (held >= train_pairs.size())
      throw DataError("trainer: too few frames to hold out a monitor slice");
    monitor_pairs.assign(train_pairs.end() - held, train_pairs.end());
    train_pairs.resize(train_pairs.size() - held);
  }
  if (train_pairs.empty()) throw DataError("trainer: no training frames");

  ParameterSet &params = model->Params();
  Optimizer opt(cfg.optimizer);
  TrainLog log;
  BestSnapshot best;

  for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    Rng rng(MixSeed(cfg.seed, "epoch-" + std::to_string(epoch)));
    rng.Shuffle(train_pairs);

    double loss_sum = 0.0;
    int num_batches = 0;
    for (size_t i = 0; i < train_pairs.size(); i += cfg.batch_size) {
      size_t end = std::min(train_pairs.size(), i + cfg.batch_size);
      std::vector<FramePair> chunk(train_pairs.begin() + i,
                                   train_pairs.begin() + end);
      WindowBatch batch = AssembleWindowBatch(chunk, model->Context());
      Tape tape(&params);
      Var loss = model->BuildLoss(&tape, batch);
      params.ZeroGrads();
      tape.Backward(loss);
      opt.Step(params);
      loss_sum += tape.ScalarValue(loss);
      ++num_batches;
    }
    log.train_loss.push_back(loss_sum / num_batches);

    double metric =
        MonitorWindowModel(*model, monitor_pairs, cfg.batch_size);
    log.monitor.push_back(metric);
    best.Offer(metric, epoch, params);
    if (epoch - best.epoch >= cfg.patience) {
      log.stop_reason = "early-stop";
      break;
    }
  }
  if (log.stop_reason.empty()) log.stop_reason = "max-epochs";

  if (best.epoch < 0)
    throw NumericError("trainer: no epoch produced a finite monitor value");
  log.best_epoch = best.epoch;
  log.best_monitor = best.monitor;
  params = std::move(best.params);
  return log;
}

TrainLog TrainSequenceModel(BlstmModel *model,
                            const std::vector<SequenceExample> &train,
                            const std::vector<SequenceExample> &valid,
                            const TrainerConfig &cfg) {
  ValidateTrainerConfig(cfg);
  std::vector<SequenceExample> train_set = train;
  std::vector<SequenceExample> valid_set = valid;
  if (valid_set.empty()) {
    Rng rng(MixSeed(cfg.seed, "holdout"));
    rng.Shuffle(train_set);
    size_t held = std::max<size_t>(
        1, static_cast<size_t>(cfg.holdout_fraction * train_set.size()));
    if (held >= train_set.size())
      throw DataError("trainer: too few utterances to hold out");
    valid_set.assign(train_set.end() - held, train_set.end());
    train_set.resize(train_set.size() - held);
  }
  if (train_set.empty()) throw DataError("trainer: no training utterances");

  ParameterSet &params = model->Params();
  Optimizer opt(cfg.optimizer);
  TrainLog log;
  BestSnapshot best;

  for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    Rng rng(MixSeed(cfg.seed, "epoch-" + std::to_string(epoch)));
    rng.Shuffle(train_set);

    double loss_sum = 0.0;
    for (const SequenceExample &ex : train_set) {
      Tape tape(&params);
      Var loss = model->BuildLoss(&tape, *ex.input, *ex.target);
      params.ZeroGrads();
      tape.Backward(loss);
      opt.Step(params);
      loss_sum += tape.ScalarValue(loss);
    }
    log.train_loss.push_back(loss_sum / train_set.size());

    double sq = 0.0;
    int64_t count = 0;
    for (const SequenceExample &ex : valid_set) {
      Tensor pred = model->Forward(*ex.input);
      sq += SupervisedLoss(pred, *ex.target) * pred.NumEl();
      count += pred.NumEl();
    }
    double metric = sq / static_cast<double>(count);
    log.monitor.push_back(metric);
    best.Offer(metric, epoch, params);
    if (epoch - best.epoch >= cfg.patience) {
      log.stop_reason = "early-stop";
      break;
    }
  }
  if (log.stop_reason.empty()) log.stop_reason = "max-epochs";

  if (best.epoch < 0)
    throw NumericError("trainer: no epoch produced a finite monitor value");
  log.best_epoch = best.epoch;
  log.best_monitor = best.monitor;
  params = std::move(best.params);
  return log;
}

}  // namespace artic
