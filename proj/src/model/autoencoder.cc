// model/autoencoder.cc

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

#include "model/autoencoder.h"

#include <algorithm>

#include "base/error.h"
#include "model/dense-stack.h"
#include "model/losses.h"

namespace artic {

namespace {

void ValidateConfig(const AutoencoderConfig &cfg) {
  if (cfg.context < 0) throw ConfigError("autoencoder: negative context");
  if (cfg.obs_dim < 1 || cfg.prior_dim < 1)
    throw ConfigError("autoencoder: dims must be positive");
  if (cfg.encoder_widths.empty())
    throw ConfigError("autoencoder: encoder needs at least one hidden layer");
  if (cfg.lambda < 0.0) throw ConfigError("autoencoder: negative lambda");
}

// Builds the hourglass: encoder "e" from in_dim through the hidden widths
// to the bottleneck, decoder "d" mirrored back to in_dim.
ParameterSet MakeHourglass(const AutoencoderConfig &cfg, int in_dim,
                           int bottleneck, uint64_t seed) {
  ParameterSet ps;
  std::vector<int> enc = cfg.encoder_widths;
  enc.push_back(bottleneck);
  AddDenseStack(&ps, "e", in_dim, enc, seed);
  std::vector<int> dec(cfg.encoder_widths.rbegin(), cfg.encoder_widths.rend());
  dec.push_back(in_dim);
  AddDenseStack(&ps, "d", bottleneck, dec, seed);
  return ps;
}

void AdoptCheckpoint(ParameterSet *params, const std::string &path,
                     const char *what) {
  ParameterSet loaded = ParameterSet::Load(path);
  if (!SameLayout(*params, loaded))
    throw DataError(std::string(what) + ": checkpoint layout mismatch: " +
                    path);
  *params = std::move(loaded);
}

}  // namespace

Ae1Model::Ae1Model(const AutoencoderConfig &cfg, uint64_t seed) : cfg_(cfg) {
  ValidateConfig(cfg);
  layers_ = static_cast<int>(cfg.encoder_widths.size()) + 1;
  params_ = MakeHourglass(cfg, WindowDim(), cfg.prior_dim, seed);
}

Var Ae1Model::BuildLoss(Tape *tape, const WindowBatch &batch) {
  const int b = batch.Rows();
  Var x = tape->Input(batch.x_win);
  Var z = tape->Input(batch.z);
  Var zhat = ApplyDenseStack(tape, "e", layers_, x);
  Var xhat = ApplyDenseStack(tape, "d", layers_, zhat);
  Var loss = tape->Add(tape->SumSq(tape->Sub(x, xhat)),
                       tape->Scale(tape->SumSq(tape->Sub(z, zhat)),
                                   cfg_.lambda));
  return tape->Scale(loss, 1.0 / b);
}

double Ae1Model::MonitorError(const WindowBatch &batch) const {
  Tensor zhat = EvalDenseStack(params_, "e", layers_, batch.x_win);
  Tensor xhat = EvalDenseStack(params_, "d", layers_, zhat);
  return SupervisedLoss(xhat, batch.x_win) * batch.x_win.Cols();
}

Tensor Ae1Model::Generate(const WindowBatch &batch) const {
  RequireTrained();
  return EvalDenseStack(params_, "e", layers_, batch.x_win);
}

void Ae1Model::LoadParams(const std::string &path) {
  AdoptCheckpoint(&params_, path, "ae1");
}

Ae2Model::Ae2Model(const AutoencoderConfig &cfg, uint64_t seed) : cfg_(cfg) {
  ValidateConfig(cfg);
  layers_ = static_cast<int>(cfg.encoder_widths.size()) + 1;
  params_ = MakeHourglass(cfg, WindowDim(), cfg.obs_dim, seed);
}

Var Ae2Model::BuildLoss(Tape *tape, const WindowBatch &batch) {
  const int b = batch.Rows();
  Var z = tape->Input(batch.z_win);
  Var x = tape->Input(batch.x);
  Var xhat = ApplyDenseStack(tape, "e", layers_, z);
  Var zhat = ApplyDenseStack(tape, "d", layers_, xhat);
  Var loss = tape->Add(tape->SumSq(tape->Sub(z, zhat)),
                       tape->Scale(tape->SumSq(tape->Sub(x, xhat)),
                                   cfg_.lambda));
  return tape->Scale(loss, 1.0 / b);
}

double Ae2Model::MonitorError(const WindowBatch &batch) const {
  Tensor xhat = EvalDenseStack(params_, "e", layers_, batch.z_win);
  return SupervisedLoss(xhat, batch.x) * batch.x.Cols();
}

Tensor Ae2Model::Generate(const WindowBatch &batch) const {
  RequireTrained();
  Tensor xhat = EvalDenseStack(params_, "e", layers_, batch.z_win);
  Tensor zhat_win = EvalDenseStack(params_, "d", layers_, xhat);
  const int g = cfg_.prior_dim;
  const int offset = cfg_.context * g;  // center frame columns
  Tensor out({batch.Rows(), g});
  for (int r = 0; r < out.Rows(); ++r)
    for (int c = 0; c < g; ++c) out.At(r, c) = zhat_win.At(r, offset + c);
  return out;
}

void Ae2Model::LoadParams(const std::string &path) {
  AdoptCheckpoint(&params_, path, "ae2");
}

Tensor Ae2ReconstructAveraged(const Ae2Model &model,
                              const AlignedUtterance &utt) {
  if (model.Params().StepCount() == 0)
    throw ConfigError("ae2: model has not been trained");
  const AutoencoderConfig &cfg = model.Config();
  const int layers = static_cast<int>(cfg.encoder_widths.size()) + 1;
  const int half = cfg.context, g = cfg.prior_dim;
  const int n = utt.priors.Rows();
  if (n == 0) throw DataError("ae2: utterance has no frames");
  Tensor z_win = WindowedAll(utt.priors, half);
  Tensor xhat = EvalDenseStack(model.Params(), "e", layers, z_win);
  Tensor rec = EvalDenseStack(model.Params(), "d", layers, xhat);
  Tensor out = Tensor::Zeros({n, g});
  for (int t = 0; t < n; ++t) {
    const int lo = std::max(0, t - half), hi = std::min(n - 1, t + half);
    for (int c = lo; c <= hi; ++c) {
      const int slot = t - c + half;
      for (int j = 0; j < g; ++j) out.At(t, j) += rec.At(c, slot * g + j);
    }
    for (int j = 0; j < g; ++j) out.At(t, j) /= hi - lo + 1;
  }
  return out;
}

}  // namespace artic
