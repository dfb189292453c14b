// model/dense-stack.h

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

#ifndef ARTIC_MODEL_DENSE_STACK_H_
#define ARTIC_MODEL_DENSE_STACK_H_

#include <cstdint>
#include <string>
#include <vector>

#include "grad/param-set.h"
#include "grad/tape.h"

namespace artic {

// Weight for y = x * w, shape [in x out], Xavier-uniform with bound
// sqrt(6 / (in + out)).
Tensor LinearInit(int in, int out, uint64_t seed);

// Registers layers "<prefix>.<k>.w" ([d_k x d_{k+1}]) and "<prefix>.<k>.b"
// (zeros) for k = 0..widths.size()-1.
void AddDenseStack(ParameterSet *ps, const std::string &prefix, int input_dim,
                   const std::vector<int> &widths, uint64_t seed);

// Tape forward through the stack: tanh on hidden layers, linear last layer.
Var ApplyDenseStack(Tape *tape, const std::string &prefix, int num_layers,
                    Var x);

// Same forward without a tape (inference path).
Tensor EvalDenseStack(const ParameterSet &ps, const std::string &prefix,
                      int num_layers, const Tensor &x);

}  // namespace artic

#endif  // ARTIC_MODEL_DENSE_STACK_H_
