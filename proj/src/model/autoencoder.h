// model/autoencoder.h

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

#ifndef ARTIC_MODEL_AUTOENCODER_H_
#define ARTIC_MODEL_AUTOENCODER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "model/window-model.h"
#include "vtv/prior-table.h"

namespace artic {

// Hourglass autoencoder shared by both weakly supervised autoencoder
// variants: tanh hidden layers, linear bottleneck and output.
struct AutoencoderConfig {
  int context = 12;                  // window half-width T
  int obs_dim = 39;                  // acoustic frame dim
  int prior_dim = kNumPriorFeatures; // G
  std::vector<int> encoder_widths = {200, 130, 70};
  double lambda = 2.0;  // prior-match weight (AE1) / acoustic weight (AE2)

  static AutoencoderConfig Ae1Defaults() { return {}; }
  static AutoencoderConfig Ae2Defaults() {
    AutoencoderConfig c;
    c.lambda = 0.5;
    return c;
  }
};

// Acoustic-window autoencoder with an articulatory bottleneck: encodes a
// window of acoustics into G latent nodes regularized toward the frame's
// prior vector, decodes back to the window.
class Ae1Model : public WindowModel {
 public:
  Ae1Model(const AutoencoderConfig &cfg, uint64_t seed);

  int Context() const override { return cfg_.context; }
  Var BuildLoss(Tape *tape, const WindowBatch &batch) override;
  double MonitorError(const WindowBatch &batch) const override;
  Tensor Generate(const WindowBatch &batch) const override;  // e(x window)
  ParameterSet &Params() override { return params_; }
  const ParameterSet &Params() const override { return params_; }

  void LoadParams(const std::string &path) override;
  int WindowDim() const { return cfg_.obs_dim * (2 * cfg_.context + 1); }
  const AutoencoderConfig &Config() const { return cfg_; }

 private:
  AutoencoderConfig cfg_;
  ParameterSet params_;
  int layers_;  // per side
};

// Prior-window autoencoder whose bottleneck is the acoustic frame: encodes
// a window of prior vectors into obs_dim nodes regularized toward the
// frame's acoustics, decodes back to the prior window.
class Ae2Model : public WindowModel {
 public:
  Ae2Model(const AutoencoderConfig &cfg, uint64_t seed);

  int Context() const override { return cfg_.context; }
  Var BuildLoss(Tape *tape, const WindowBatch &batch) override;
  double MonitorError(const WindowBatch &batch) const override;
  // Center frame of the decoded prior window.
  Tensor Generate(const WindowBatch &batch) const override;
  ParameterSet &Params() override { return params_; }
  const ParameterSet &Params() const override { return params_; }

  void LoadParams(const std::string &path) override;
  int WindowDim() const { return cfg_.prior_dim * (2 * cfg_.context + 1); }
  const AutoencoderConfig &Config() const { return cfg_; }

 private:
  AutoencoderConfig cfg_;
  ParameterSet params_;
  int layers_;
};

// Alternative readout averaging overlapping windows: every window position
// whose span covers frame t contributes its reconstruction of t, and the
// contributions are averaged.  Same shape as GenerateSequence, [N x G].
Tensor Ae2ReconstructAveraged(const Ae2Model &model,
                              const AlignedUtterance &utt);

}  // namespace artic

#endif  // ARTIC_MODEL_AUTOENCODER_H_
