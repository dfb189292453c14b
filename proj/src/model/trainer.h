// model/trainer.h

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

#ifndef ARTIC_MODEL_TRAINER_H_
#define ARTIC_MODEL_TRAINER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "grad/optimizer.h"
#include "model/blstm.h"
#include "model/window-model.h"

namespace artic {

struct TrainerConfig {
  int max_epochs = 50;
  int batch_size = 128;
  // Epochs allowed without a new best monitor value before stopping.
  int patience = 2;
  // Fraction of training data held out for monitoring when no validation
  // set is provided.
  double holdout_fraction = 0.1;
  OptimizerConfig optimizer = OptimizerConfig::SgdExpDecay();
  uint64_t seed = 1;
};

struct TrainLog {
  std::vector<double> train_loss;  // mean batch loss per epoch
  std::vector<double> monitor;     // early-stop metric per epoch
  int best_epoch = -1;             // 1-based
  double best_monitor = 0.0;
  std::string stop_reason;         // "max-epochs" or "early-stop"
};

// Minibatch training over all frames of the train utterances.  The monitor
// is the model's acoustic reconstruction error on the validation utterances
// (or a held-out slice of the training frames when none are given); the
// parameters of the best-monitor epoch are restored at the end.
TrainLog TrainWindowModel(WindowModel *model,
                          const std::vector<const AlignedUtterance *> &train,
                          const std::vector<const AlignedUtterance *> &valid,
                          const TrainerConfig &cfg);

// One full input/target sequence pair (one utterance).
struct SequenceExample {
  const Tensor *input = nullptr;
  const Tensor *target = nullptr;
};

// Per-utterance training; the monitor is validation MSE.
TrainLog TrainSequenceModel(BlstmModel *model,
                            const std::vector<SequenceExample> &train,
                            const std::vector<SequenceExample> &valid,
                            const TrainerConfig &cfg);

}  // namespace artic

#endif  // ARTIC_MODEL_TRAINER_H_
