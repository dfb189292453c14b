// model/resdnn.h

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

#ifndef ARTIC_MODEL_RESDNN_H_
#define ARTIC_MODEL_RESDNN_H_

#include <cstdint>
#include <string>
#include <vector>

#include "model/window-model.h"
#include "vtv/prior-table.h"

namespace artic {

// Corrects the center prior frame with a coarticulation residual computed
// linearly from the prior window, then reconstructs the acoustics from the
// corrected vector through a dense trunk.
struct ResDnnConfig {
  int context = 12;                   // window half-width T
  int obs_dim = 39;
  int prior_dim = kNumPriorFeatures;  // G
  std::vector<int> trunk_widths = {1000, 1000, 1000, 1000};
  double lambda_w = 0.01;             // residual weight penalty
  // The residual R_t is a single scalar added to every component (the
  // literal equation).  The per-component variant learns one residual per
  // output node instead.
  bool per_component = false;
};

// The residual layer on one window: z_window is [(2T+1) x G], w is the flat
// weight vector of length (2T+1)*G, output is the corrected center frame
// z_t + R_t (length G).  With w = 0 this is exactly the center frame.
Tensor ResidualLayer(const Tensor &z_window, const Tensor &w);

class ResDnnModel : public WindowModel {
 public:
  ResDnnModel(const ResDnnConfig &cfg, uint64_t seed);

  int Context() const override { return cfg_.context; }
  Var BuildLoss(Tape *tape, const WindowBatch &batch) override;
  double MonitorError(const WindowBatch &batch) const override;
  // The corrected prior vectors (residual layer output).
  Tensor Generate(const WindowBatch &batch) const override;
  ParameterSet &Params() override { return params_; }
  const ParameterSet &Params() const override { return params_; }

  void LoadParams(const std::string &path) override;
  const ResDnnConfig &Config() const { return cfg_; }

 private:
  // z_hat for a batch, shared by the training and inference paths.
  Tensor CorrectedPriors(const WindowBatch &batch) const;

  ResDnnConfig cfg_;
  ParameterSet params_;
  int trunk_layers_;
};

}  // namespace artic

#endif  // ARTIC_MODEL_RESDNN_H_
