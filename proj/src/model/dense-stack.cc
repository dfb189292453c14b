// model/dense-stack.cc

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

#include "model/dense-stack.h"

#include "base/error.h"
#include "base/rng.h"
#include "core/kernels.h"

namespace artic {

Tensor LinearInit(int in, int out, uint64_t seed) {
  // XavierInit returns [fan_out x fan_in]; entries are iid uniform with the
  // symmetric bound sqrt(6/(in+out)), so requesting the transposed shape
  // directly gives the right distribution.
  return XavierInit(/*fan_in=*/out, /*fan_out=*/in, seed);
}

void AddDenseStack(ParameterSet *ps, const std::string &prefix, int input_dim,
                   const std::vector<int> &widths, uint64_t seed) {
  if (widths.empty()) throw ConfigError("dense stack needs at least one layer");
  int in = input_dim;
  for (size_t k = 0; k < widths.size(); ++k) {
    if (widths[k] <= 0) throw ConfigError("dense stack width must be positive");
    std::string layer = prefix + "." + std::to_string(k);
    ps->Add(layer + ".w",
            LinearInit(in, widths[k], MixSeed(seed, layer + ".w")));
    ps->Add(layer + ".b", Tensor::Zeros({widths[k]}));
    in = widths[k];
  }
}

Var ApplyDenseStack(Tape *tape, const std::string &prefix, int num_layers,
                    Var x) {
  Var h = x;
  for (int k = 0; k < num_layers; ++k) {
    std::string layer = prefix + "." + std::to_string(k);
    h = tape->AddRowVec(tape->MatMul(h, tape->Param(layer + ".w")),
                        tape->Param(layer + ".b"));
    if (k + 1 < num_layers) h = tape->Tanh(h);
  }
  return h;
}

Tensor EvalDenseStack(const ParameterSet &ps, const std::string &prefix,
                      int num_layers, const Tensor &x) {
  Tensor h = x;
  for (int k = 0; k < num_layers; ++k) {
    std::string layer = prefix + "." + std::to_string(k);
    const Tensor &w = ps.Value(layer + ".w");
    const Tensor &b = ps.Value(layer + ".b");
    if (h.Cols() != w.Rows())
      throw DataError("dense stack input dim mismatch at " + layer);
    Tensor y({h.Rows(), w.Cols()});
    kernels::MatMulNN(h.RowPtr(0), w.RowPtr(0), y.RowPtr(0), h.Rows(),
                      h.Cols(), w.Cols());
    for (int r = 0; r < y.Rows(); ++r)
      for (int c = 0; c < y.Cols(); ++c) y.At(r, c) += b.data[c];
    if (k + 1 < num_layers)
      kernels::Tanh(y.RowPtr(0), y.RowPtr(0), y.NumEl());
    h = std::move(y);
  }
  return h;
}

}  // namespace artic
