// grad/tape.h

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

#ifndef ARTIC_GRAD_TAPE_H_
#define ARTIC_GRAD_TAPE_H_

#include <string>
#include <vector>

#include "core/tensor.h"
#include "grad/param-set.h"

namespace artic {

// Handle into a Tape.
struct Var {
  int id = -1;
  bool Valid() const { return id >= 0; }
};

// Reverse-mode gradient tape.  A forward pass appends nodes in evaluation
// order; Backward walks them in reverse.  Matrices are rank-2 row-major,
// vectors rank-1, scalars shape {1}.  One tape serves one forward/backward
// pair and is then discarded.
class Tape {
 public:
  explicit Tape(ParameterSet *params = nullptr) : params_(params) {}

  // Leaves.
  Var Param(const std::string &name);  // requires a bound ParameterSet
  Var Param(int param_index);
  Var Input(Tensor value);  // constant, no gradient

  // Elementwise and linear algebra.
  Var MatMul(Var a, Var b);          // [m x k] * [k x n]
  Var Add(Var a, Var b);             // same shape
  Var Sub(Var a, Var b);             // same shape
  Var Mul(Var a, Var b);             // elementwise, same shape
  Var Scale(Var a, double c);
  Var AddRowVec(Var a, Var v);       // [m x n] + v[n] broadcast over rows
  Var MulRowVec(Var a, Var v);       // [m x n] * v[n] broadcast over rows
  Var AddColScalar(Var a, Var col);  // [m x n] + col[m x 1] broadcast over cols
  Var Tanh(Var a);
  Var Sigmoid(Var a);

  // Structure.
  Var RowRange(Var a, int r0, int r1);  // rows [r0, r1)
  Var Row(Var a, int r) { return RowRange(a, r, r + 1); }
  Var ColRange(Var a, int c0, int c1);  // cols [c0, c1)
  Var ConcatCols(const std::vector<Var> &parts);
  Var StackRows(const std::vector<Var> &rows);  // each [1 x n] or [n]

  // Reductions to scalars.
  Var Sum(Var a);
  Var SumSq(Var a);

  const Tensor &Value(Var v) const { return nodes_[v.id].value; }
  double ScalarValue(Var v) const;

  // Accumulates d(loss)/d(parameter) into the bound ParameterSet (or into
  // grad_out, parallel to the ParameterSet layout, when given).  Gradients
  // are added on top of existing contents; callers zero them explicitly.
  // A NaN/Inf parameter gradient raises NumericError naming the parameter.
  void Backward(Var loss, std::vector<Tensor> *grad_out = nullptr);

  // Gradient w.r.t. a non-leaf node after Backward (for tests).
  const Tensor &GradOf(Var v) const { return nodes_[v.id].grad; }

  int NodeCount() const { return static_cast<int>(nodes_.size()); }

 private:
  enum class Op {
    kParam, kInput, kMatMul, kAdd, kSub, kMul, kScale,
    kAddRowVec, kMulRowVec, kAddColScalar, kTanh, kSigmoid,
    kRowRange, kColRange, kConcatCols, kStackRows, kSum, kSumSq,
  };

  struct Node {
    Op op;
    Tensor value;
    Tensor grad;  // allocated lazily in Backward
    std::vector<int> srcs;
    int param_index = -1;
    double scalar = 0.0;
    int i0 = 0, i1 = 0;
    bool needs_grad = false;
  };

  int Push(Node n);
  Node &At(Var v);
  const Node &At(Var v) const;
  bool NeedsGrad(const std::vector<int> &srcs) const;
  Tensor &GradBuf(int id);
  void BackwardNode(int id, std::vector<Tensor> *grad_out);

  std::vector<Node> nodes_;
  ParameterSet *params_;
};

}  // namespace artic

#endif  // ARTIC_GRAD_TAPE_H_
