// grad/optimizer.h

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

#ifndef ARTIC_GRAD_OPTIMIZER_H_
#define ARTIC_GRAD_OPTIMIZER_H_

#include <string>
#include <vector>

#include "grad/param-set.h"

namespace artic {

struct OptimizerConfig {
  enum class Kind { kAdam, kSgdExpDecay };
  Kind kind = Kind::kAdam;
  double learning_rate = 0.1;
  // Adam moments and stabilizer.
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  // Exponential decay schedule for SGD: lr(step) = lr * rate^floor(step/every).
  int decay_every = 10000;
  double decay_rate = 0.96;
  // Optional gradient-norm clipping; 0 disables.
  double clip_norm = 0.0;

  static OptimizerConfig Adam() { return OptimizerConfig{}; }
  static OptimizerConfig SgdExpDecay() {
    OptimizerConfig c;
    c.kind = Kind::kSgdExpDecay;
    c.learning_rate = 0.01;
    return c;
  }
};

// Owns the moment state for one ParameterSet.  Step() applies one update
// from the currently populated gradients and bumps the step counter.
class Optimizer {
 public:
  explicit Optimizer(OptimizerConfig cfg) : cfg_(cfg) {}

  void Step(ParameterSet &params);

  // Effective SGD learning rate at a given step count.
  double EffectiveLr(int64_t step) const;

  const OptimizerConfig &config() const { return cfg_; }

 private:
  void AdamStep(ParameterSet &params);
  void SgdStep(ParameterSet &params);
  void MaybeClip(ParameterSet &params);

  OptimizerConfig cfg_;
  std::vector<Tensor> m_, v_;  // Adam moments, lazily sized
  int64_t adam_t_ = 0;
};

}  // namespace artic

#endif  // ARTIC_GRAD_OPTIMIZER_H_
