// model/blstm.h

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

#ifndef ARTIC_MODEL_BLSTM_H_
#define ARTIC_MODEL_BLSTM_H_

#include <cstdint>
#include <string>

#include "grad/param-set.h"
#include "grad/tape.h"

namespace artic {

// Stacked bidirectional peephole LSTM with a linear head over the
// concatenated final-layer states.  Gate activations sigmoid, cell and
// hidden activations tanh.
struct BlstmConfig {
  int input_dim = 39;
  int output_dim = 16;
  int num_layers = 5;
  int hidden = 250;  // memory blocks per direction per layer
};

class BlstmModel {
 public:
  BlstmModel(const BlstmConfig &cfg, uint64_t seed);

  // Per-frame regression outputs for one utterance: [N x output_dim].
  Var BuildOutputs(Tape *tape, const Tensor &seq) const;

  // Mean squared error against the target sequence.
  Var BuildLoss(Tape *tape, const Tensor &seq, const Tensor &target) const;

  // Tape-free forward (inference path).
  Tensor Forward(const Tensor &seq) const;

  ParameterSet &Params() { return params_; }
  const ParameterSet &Params() const { return params_; }
  const BlstmConfig &Config() const { return cfg_; }

  void LoadParams(const std::string &path);

 private:
  BlstmConfig cfg_;
  ParameterSet params_;
};

}  // namespace artic

#endif  // ARTIC_MODEL_BLSTM_H_
