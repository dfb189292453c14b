// grad/optimizer.cc

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

#include "grad/optimizer.h"

#include <cmath>

#include "base/error.h"

namespace artic {

void Optimizer::Step(ParameterSet &params) {
  if (!params.GradsPopulated())
    throw NumericError("optimizer step before any backward pass");
  MaybeClip(params);
  if (cfg_.kind == OptimizerConfig::Kind::kAdam)
    AdamStep(params);
  else
    SgdStep(params);
  params.BumpStepCount();
  for (int i = 0; i < params.Size(); ++i) {
    if (!params.Value(i).AllFinite())
      throw NumericError("non-finite parameter '" + params.Name(i) + "' after update");
  }
}

double Optimizer::EffectiveLr(int64_t step) const {
  if (cfg_.kind == OptimizerConfig::Kind::kAdam) return cfg_.learning_rate;
  int64_t stages = step / cfg_.decay_every;
  return cfg_.learning_rate * std::pow(cfg_.decay_rate, static_cast<double>(stages));
}

void Optimizer::MaybeClip(ParameterSet &params) {
  if (cfg_.clip_norm <= 0.0) return;
  double sq = 0.0;
  for (int i = 0; i < params.Size(); ++i)
    for (double g : params.Grad(i).data) sq += g * g;
  double norm = std::sqrt(sq);
  if (norm <= cfg_.clip_norm) return;
  double scale = cfg_.clip_norm / norm;
  for (int i = 0; i < params.Size(); ++i)
    for (double &g : params.Grad(i).data) g *= scale;
}

void Optimizer::AdamStep(ParameterSet &params) {
  if (m_.empty()) {
    m_.reserve(params.Size());
    v_.reserve(params.Size());
    for (int i = 0; i < params.Size(); ++i) {
      m_.push_back(Tensor::Zeros(params.Value(i).shape));
      v_.push_back(Tensor::Zeros(params.Value(i).shape));
    }
  }
  if (static_cast<int>(m_.size()) != params.Size())
    throw ConfigError("optimizer state does not match parameter set");
  ++adam_t_;
  double bc1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(adam_t_));
  double bc2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(adam_t_));
  for (int i = 0; i < params.Size(); ++i) {
    Tensor &p = params.Value(i);
    const Tensor &g = params.Grad(i);
    Tensor &m = m_[i];
    Tensor &v = v_[i];
    for (size_t j = 0; j < p.data.size(); ++j) {
      double gj = g.data[j];
      m.data[j] = cfg_.beta1 * m.data[j] + (1.0 - cfg_.beta1) * gj;
      v.data[j] = cfg_.beta2 * v.data[j] + (1.0 - cfg_.beta2) * gj * gj;
      double mhat = m.data[j] / bc1;
      double vhat = v.data[j] / bc2;
      p.data[j] -= cfg_.learning_rate * mhat / (std::sqrt(vhat) + cfg_.epsilon);
    }
  }
}

void Optimizer::SgdStep(ParameterSet &params) {
  double lr = EffectiveLr(params.StepCount());
  for (int i = 0; i < params.Size(); ++i) {
    Tensor &p = params.Value(i);
    const Tensor &g = params.Grad(i);
    for (size_t j = 0; j < p.data.size(); ++j) p.data[j] -= lr * g.data[j];
  }
}

}  // namespace artic
