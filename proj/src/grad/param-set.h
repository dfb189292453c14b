// grad/param-set.h

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

#ifndef ARTIC_GRAD_PARAM_SET_H_
#define ARTIC_GRAD_PARAM_SET_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/tensor.h"

namespace artic {

// Named trainable tensors with parallel gradient storage.  A ParameterSet is
// exclusively owned during a training step; frozen sets may be shared
// read-only across threads.
class ParameterSet {
 public:
  // Registers a parameter; the gradient starts zeroed with the same shape.
  // Duplicate names are an error.
  int Add(const std::string &name, Tensor init);

  bool Has(const std::string &name) const;
  int Index(const std::string &name) const;  // throws if absent
  int Size() const { return static_cast<int>(values_.size()); }

  const std::string &Name(int idx) const { return names_[idx]; }
  Tensor &Value(int idx) { return values_[idx]; }
  const Tensor &Value(int idx) const { return values_[idx]; }
  Tensor &Value(const std::string &name) { return values_[Index(name)]; }
  const Tensor &Value(const std::string &name) const { return values_[Index(name)]; }
  Tensor &Grad(int idx) { return grads_[idx]; }
  const Tensor &Grad(int idx) const { return grads_[idx]; }
  Tensor &Grad(const std::string &name) { return grads_[Index(name)]; }

  void ZeroGrads();

  int64_t StepCount() const { return step_count_; }
  void SetStepCount(int64_t s) { step_count_ = s; }
  void BumpStepCount() { ++step_count_; }

  // Set by backward passes; optimizer steps require it.
  bool GradsPopulated() const { return grads_populated_; }
  void MarkGradsPopulated() { grads_populated_ = true; }

  int64_t TotalParams() const;

  // Binary checkpoint: magic "ARCN", version, step counter, then one record
  // per parameter (name, rank, dims, f64 payload).  Round-trips bit-exactly.
  void Save(const std::string &path) const;
  static ParameterSet Load(const std::string &path);

 private:
  std::vector<std::string> names_;
  std::vector<Tensor> values_;
  std::vector<Tensor> grads_;
  std::map<std::string, int> index_;
  int64_t step_count_ = 0;
  bool grads_populated_ = false;
};

// (fan_out x fan_in) tensor drawn uniformly from
// [-sqrt(6/(fan_in+fan_out)), +sqrt(6/(fan_in+fan_out))].
Tensor XavierInit(int fan_in, int fan_out, uint64_t seed);

// True when both sets declare the same parameter names, in order, with the
// same shapes (values may differ).
bool SameLayout(const ParameterSet &a, const ParameterSet &b);

}  // namespace artic

#endif  // ARTIC_GRAD_PARAM_SET_H_
