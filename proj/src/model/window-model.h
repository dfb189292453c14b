// model/window-model.h

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

#ifndef ARTIC_MODEL_WINDOW_MODEL_H_
#define ARTIC_MODEL_WINDOW_MODEL_H_

#include "grad/param-set.h"
#include "grad/tape.h"
#include "model/context-window.h"

namespace artic {

// A model trained on per-frame context windows (no frame-level articulatory
// supervision): consumes minibatches of WindowBatch rows and generates one
// articulatory vector per row.
class WindowModel {
 public:
  virtual ~WindowModel() = default;

  virtual int Context() const = 0;  // half-width T

  // Minibatch training loss (per-sample terms summed, averaged over rows).
  virtual Var BuildLoss(Tape *tape, const WindowBatch &batch) = 0;

  // Acoustic reconstruction error per row, averaged over the batch (the
  // quantity monitored for early stopping).
  virtual double MonitorError(const WindowBatch &batch) const = 0;

  // Generated articulatory vectors, one row per batch row: [B x G].
  // Requires a trained model (at least one optimizer step or a loaded
  // checkpoint with a nonzero step count).
  virtual Tensor Generate(const WindowBatch &batch) const = 0;

  // Adopts a checkpoint with a layout matching this model's parameters.
  virtual void LoadParams(const std::string &path) = 0;

  virtual ParameterSet &Params() = 0;
  virtual const ParameterSet &Params() const = 0;

 protected:
  void RequireTrained() const;
};

// Generated articulatory sequence for every frame of one utterance.
Tensor GenerateSequence(const WindowModel &model, const AlignedUtterance &utt);

}  // namespace artic

#endif  // ARTIC_MODEL_WINDOW_MODEL_H_
