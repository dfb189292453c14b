// grad/tape.cc

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

#include "grad/tape.h"

#include <cmath>

#include "base/error.h"
#include "core/kernels.h"

namespace artic {

namespace {

void RequireRank2(const Tensor &t, const char *ctx) {
  if (t.Rank() != 2) throw DataError(std::string(ctx) + ": expected rank-2 tensor, got " + t.ShapeString());
}

// Vectors may be [n] or [1 x n]; returns n.
int VecLen(const Tensor &t, const char *ctx) {
  if (t.Rank() == 1) return t.shape[0];
  if (t.Rank() == 2 && t.shape[0] == 1) return t.shape[1];
  throw DataError(std::string(ctx) + ": expected vector, got " + t.ShapeString());
}

}  // namespace

int Tape::Push(Node n) {
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

Tape::Node &Tape::At(Var v) {
  if (!v.Valid() || v.id >= static_cast<int>(nodes_.size()))
    throw ConfigError("invalid tape variable");
  return nodes_[v.id];
}

const Tape::Node &Tape::At(Var v) const {
  if (!v.Valid() || v.id >= static_cast<int>(nodes_.size()))
    throw ConfigError("invalid tape variable");
  return nodes_[v.id];
}

bool Tape::NeedsGrad(const std::vector<int> &srcs) const {
  for (int s : srcs)
    if (nodes_[s].needs_grad) return true;
  return false;
}

Tensor &Tape::GradBuf(int id) {
  Node &n = nodes_[id];
  if (n.grad.data.empty()) n.grad = Tensor::Zeros(n.value.shape);
  return n.grad;
}

Var Tape::Param(const std::string &name) {
  if (params_ == nullptr) throw ConfigError("tape has no bound ParameterSet");
  return Param(params_->Index(name));
}

Var Tape::Param(int param_index) {
  if (params_ == nullptr) throw ConfigError("tape has no bound ParameterSet");
  Node n;
  n.op = Op::kParam;
  n.value = params_->Value(param_index);
  n.param_index = param_index;
  n.needs_grad = true;
  return Var{Push(std::move(n))};
}

Var Tape::Input(Tensor value) {
  Node n;
  n.op = Op::kInput;
  n.value = std::move(value);
  n.needs_grad = false;
  return Var{Push(std::move(n))};
}

Var Tape::MatMul(Var a, Var b) {
  const Tensor &ta = At(a).value, &tb = At(b).value;
  RequireRank2(ta, "MatMul lhs");
  RequireRank2(tb, "MatMul rhs");
  if (ta.shape[1] != tb.shape[0])
    throw DataError("MatMul shape mismatch: " + ta.ShapeString() + " * " + tb.ShapeString());
  Node n;
  n.op = Op::kMatMul;
  n.srcs = {a.id, b.id};
  n.needs_grad = NeedsGrad(n.srcs);
  n.value = Tensor({ta.shape[0], tb.shape[1]});
  kernels::MatMulNN(ta.data.data(), tb.data.data(), n.value.data.data(),
                    ta.shape[0], ta.shape[1], tb.shape[1]);
  return Var{Push(std::move(n))};
}

Var Tape::Add(Var a, Var b) {
  const Tensor &ta = At(a).value, &tb = At(b).value;
  if (!ta.SameShape(tb))
    throw DataError("Add shape mismatch: " + ta.ShapeString() + " vs " + tb.ShapeString());
  Node n;
  n.op = Op::kAdd;
  n.srcs = {a.id, b.id};
  n.needs_grad = NeedsGrad(n.srcs);
  n.value = ta;
  for (size_t i = 0; i < n.value.data.size(); ++i) n.value.data[i] += tb.data[i];
  return Var{Push(std::move(n))};
}

Var Tape::Sub(Var a, Var b) {
  const Tensor &ta = At(a).value, &tb = At(b).value;
  if (!ta.SameShape(tb))
    throw DataError("Sub shape mismatch: " + ta.ShapeString() + " vs " + tb.ShapeString());
  Node n;
  n.op = Op::kSub;
  n.srcs = {a.id, b.id};
  n.needs_grad = NeedsGrad(n.srcs);
  n.value = ta;
  for (size_t i = 0; i < n.value.data.size(); ++i) n.value.data[i] -= tb.data[i];
  return Var{Push(std::move(n))};
}

Var Tape::Mul(Var a, Var b) {
  const Tensor &ta = At(a).value, &tb = At(b).value;
  if (!ta.SameShape(tb))
    throw DataError("Mul shape mismatch: " + ta.ShapeString() + " vs " + tb.ShapeString());
  Node n;
  n.op = Op::kMul;
  n.srcs = {a.id, b.id};
  n.needs_grad = NeedsGrad(n.srcs);
  n.value = ta;
  for (size_t i = 0; i < n.value.data.size(); ++i) n.value.data[i] *= tb.data[i];
  return Var{Push(std::move(n))};
}

Var Tape::Scale(Var a, double c) {
  Node n;
  n.op = Op::kScale;
  n.srcs = {a.id};
  n.scalar = c;
  n.needs_grad = NeedsGrad(n.srcs);
  n.value = At(a).value;
  for (double &v : n.value.data) v *= c;
  return Var{Push(std::move(n))};
}

Var Tape::AddRowVec(Var a, Var v) {
  const Tensor &ta = At(a).value, &tv = At(v).value;
  RequireRank2(ta, "AddRowVec");
  int len = VecLen(tv, "AddRowVec");
  if (len != ta.shape[1]) throw DataError("AddRowVec width mismatch");
  Node n;
  n.op = Op::kAddRowVec;
  n.srcs = {a.id, v.id};
  n.needs_grad = NeedsGrad(n.srcs);
  n.value = ta;
  for (int r = 0; r < ta.shape[0]; ++r) {
    double *row = n.value.RowPtr(r);
    for (int c = 0; c < len; ++c) row[c] += tv.data[c];
  }
  return Var{Push(std::move(n))};
}

Var Tape::MulRowVec(Var a, Var v) {
  const Tensor &ta = At(a).value, &tv = At(v).value;
  RequireRank2(ta, "MulRowVec");
  int len = VecLen(tv, "MulRowVec");
  if (len != ta.shape[1]) throw DataError("MulRowVec width mismatch");
  Node n;
  n.op = Op::kMulRowVec;
  n.srcs = {a.id, v.id};
  n.needs_grad = NeedsGrad(n.srcs);
  n.value = ta;
  for (int r = 0; r < ta.shape[0]; ++r) {
    double *row = n.value.RowPtr(r);
    for (int c = 0; c < len; ++c) row[c] *= tv.data[c];
  }
  return Var{Push(std::move(n))};
}

Var Tape::AddColScalar(Var a, Var col) {
  const Tensor &ta = At(a).value, &tc = At(col).value;
  RequireRank2(ta, "AddColScalar");
  RequireRank2(tc, "AddColScalar col");
  if (tc.shape[0] != ta.shape[0] || tc.shape[1] != 1)
    throw DataError("AddColScalar expects col shaped [rows x 1]");
  Node n;
  n.op = Op::kAddColScalar;
  n.srcs = {a.id, col.id};
  n.needs_grad = NeedsGrad(n.srcs);
  n.value = ta;
  for (int r = 0; r < ta.shape[0]; ++r) {
    double add = tc.data[r];
    double *row = n.value.RowPtr(r);
    for (int c = 0; c < ta.shape[1]; ++c) row[c] += add;
  }
  return Var{Push(std::move(n))};
}

Var Tape::Tanh(Var a) {
  Node n;
  n.op = Op::kTanh;
  n.srcs = {a.id};
  n.needs_grad = NeedsGrad(n.srcs);
  const Tensor &ta = At(a).value;
  n.value = Tensor::Zeros(ta.shape);
  kernels::Tanh(ta.data.data(), n.value.data.data(), ta.NumEl());
  return Var{Push(std::move(n))};
}

Var Tape::Sigmoid(Var a) {
  Node n;
  n.op = Op::kSigmoid;
  n.srcs = {a.id};
  n.needs_grad = NeedsGrad(n.srcs);
  const Tensor &ta = At(a).value;
  n.value = Tensor::Zeros(ta.shape);
  kernels::Sigmoid(ta.data.data(), n.value.data.data(), ta.NumEl());
  return Var{Push(std::move(n))};
}

Var Tape::RowRange(Var a, int r0, int r1) {
  const Tensor &ta = At(a).value;
  RequireRank2(ta, "RowRange");
  if (r0 < 0 || r1 > ta.shape[0] || r0 >= r1) throw DataError("RowRange out of bounds");
  Node n;
  n.op = Op::kRowRange;
  n.srcs = {a.id};
  n.i0 = r0;
  n.i1 = r1;
  n.needs_grad = NeedsGrad(n.srcs);
  n.value = Tensor({r1 - r0, ta.shape[1]});
  std::copy(ta.RowPtr(r0), ta.RowPtr(r0) + static_cast<size_t>(r1 - r0) * ta.shape[1],
            n.value.data.begin());
  return Var{Push(std::move(n))};
}

Var Tape::ColRange(Var a, int c0, int c1) {
  const Tensor &ta = At(a).value;
  RequireRank2(ta, "ColRange");
  if (c0 < 0 || c1 > ta.shape[1] || c0 >= c1) throw DataError("ColRange out of bounds");
  Node n;
  n.op = Op::kColRange;
  n.srcs = {a.id};
  n.i0 = c0;
  n.i1 = c1;
  n.needs_grad = NeedsGrad(n.srcs);
  n.value = Tensor({ta.shape[0], c1 - c0});
  for (int r = 0; r < ta.shape[0]; ++r)
    std::copy(ta.RowPtr(r) + c0, ta.RowPtr(r) + c1, n.value.RowPtr(r));
  return Var{Push(std::move(n))};
}

Var Tape::ConcatCols(const std::vector<Var> &parts) {
  if (parts.empty()) throw DataError("ConcatCols of nothing");
  int rows = At(parts[0]).value.shape[0];
  int total = 0;
  for (Var p : parts) {
    const Tensor &t = At(p).value;
    RequireRank2(t, "ConcatCols");
    if (t.shape[0] != rows) throw DataError("ConcatCols row mismatch");
    total += t.shape[1];
  }
  Node n;
  n.op = Op::kConcatCols;
  n.needs_grad = false;
  for (Var p : parts) {
    n.srcs.push_back(p.id);
    if (nodes_[p.id].needs_grad) n.needs_grad = true;
  }
  n.value = Tensor({rows, total});
  int off = 0;
  for (Var p : parts) {
    const Tensor &t = At(p).value;
    for (int r = 0; r < rows; ++r)
      std::copy(t.RowPtr(r), t.RowPtr(r) + t.shape[1], n.value.RowPtr(r) + off);
    off += t.shape[1];
  }
  return Var{Push(std::move(n))};
}

Var Tape::StackRows(const std::vector<Var> &rows) {
  if (rows.empty()) throw DataError("StackRows of nothing");
  int cols = VecLen(At(rows[0]).value, "StackRows");
  Node n;
  n.op = Op::kStackRows;
  n.needs_grad = false;
  for (Var r : rows) {
    if (VecLen(At(r).value, "StackRows") != cols) throw DataError("StackRows width mismatch");
    n.srcs.push_back(r.id);
    if (nodes_[r.id].needs_grad) n.needs_grad = true;
  }
  n.value = Tensor({static_cast<int>(rows.size()), cols});
  for (size_t i = 0; i < rows.size(); ++i) {
    const Tensor &t = At(rows[i]).value;
    std::copy(t.data.begin(), t.data.end(), n.value.RowPtr(static_cast<int>(i)));
  }
  return Var{Push(std::move(n))};
}

Var Tape::Sum(Var a) {
  Node n;
  n.op = Op::kSum;
  n.srcs = {a.id};
  n.needs_grad = NeedsGrad(n.srcs);
  double s = 0.0;
  for (double v : At(a).value.data) s += v;
  n.value = Tensor::Scalar(s);
  return Var{Push(std::move(n))};
}

Var Tape::SumSq(Var a) {
  Node n;
  n.op = Op::kSumSq;
  n.srcs = {a.id};
  n.needs_grad = NeedsGrad(n.srcs);
  double s = 0.0;
  for (double v : At(a).value.data) s += v * v;
  n.value = Tensor::Scalar(s);
  return Var{Push(std::move(n))};
}

double Tape::ScalarValue(Var v) const {
  const Tensor &t = At(v).value;
  if (t.NumEl() != 1) throw DataError("ScalarValue on tensor " + t.ShapeString());
  return t.data[0];
}

void Tape::BackwardNode(int id, std::vector<Tensor> *grad_out) {
  Node &n = nodes_[id];
  if (!n.needs_grad || n.grad.data.empty()) return;
  const Tensor &g = n.grad;
  switch (n.op) {
    case Op::kParam: {
      Tensor &dst = grad_out != nullptr ? (*grad_out)[n.param_index]
                                        : params_->Grad(n.param_index);
      for (size_t i = 0; i < dst.data.size(); ++i) dst.data[i] += g.data[i];
      break;
    }
    case Op::kInput:
      break;
    case Op::kMatMul: {
      Node &a = nodes_[n.srcs[0]], &b = nodes_[n.srcs[1]];
      int m = a.value.shape[0], k = a.value.shape[1], nn = b.value.shape[1];
      if (a.needs_grad)
        kernels::MatMulNT(g.data.data(), b.value.data.data(), GradBuf(n.srcs[0]).data.data(),
                          m, nn, k, /*accumulate=*/true);
      if (b.needs_grad)
        kernels::MatMulTN(a.value.data.data(), g.data.data(), GradBuf(n.srcs[1]).data.data(),
                          k, m, nn, /*accumulate=*/true);
      break;
    }
    case Op::kAdd: {
      for (int s = 0; s < 2; ++s) {
        if (!nodes_[n.srcs[s]].needs_grad) continue;
        Tensor &d = GradBuf(n.srcs[s]);
        for (size_t i = 0; i < d.data.size(); ++i) d.data[i] += g.data[i];
      }
      break;
    }
    case Op::kSub: {
      if (nodes_[n.srcs[0]].needs_grad) {
        Tensor &d = GradBuf(n.srcs[0]);
        for (size_t i = 0; i < d.data.size(); ++i) d.data[i] += g.data[i];
      }
      if (nodes_[n.srcs[1]].needs_grad) {
        Tensor &d = GradBuf(n.srcs[1]);
        for (size_t i = 0; i < d.data.size(); ++i) d.data[i] -= g.data[i];
      }
      break;
    }
    case Op::kMul: {
      const Tensor &av = nodes_[n.srcs[0]].value, &bv = nodes_[n.srcs[1]].value;
      if (nodes_[n.srcs[0]].needs_grad) {
        Tensor &d = GradBuf(n.srcs[0]);
        for (size_t i = 0; i < d.data.size(); ++i) d.data[i] += g.data[i] * bv.data[i];
      }
      if (nodes_[n.srcs[1]].needs_grad) {
        Tensor &d = GradBuf(n.srcs[1]);
        for (size_t i = 0; i < d.data.size(); ++i) d.data[i] += g.data[i] * av.data[i];
      }
      break;
    }
    case Op::kScale: {
      if (nodes_[n.srcs[0]].needs_grad) {
        Tensor &d = GradBuf(n.srcs[0]);
        for (size_t i = 0; i < d.data.size(); ++i) d.data[i] += n.scalar * g.data[i];
      }
      break;
    }
    case Op::kAddRowVec: {
      int rows = n.value.shape[0], cols = n.value.shape[1];
      if (nodes_[n.srcs[0]].needs_grad) {
        Tensor &d = GradBuf(n.srcs[0]);
        for (size_t i = 0; i < d.data.size(); ++i) d.data[i] += g.data[i];
      }
      if (nodes_[n.srcs[1]].needs_grad) {
        Tensor &d = GradBuf(n.srcs[1]);
        for (int r = 0; r < rows; ++r) {
          const double *gr = g.RowPtr(r);
          for (int c = 0; c < cols; ++c) d.data[c] += gr[c];
        }
      }
      break;
    }
    case Op::kMulRowVec: {
      int rows = n.value.shape[0], cols = n.value.shape[1];
      const Tensor &av = nodes_[n.srcs[0]].value, &vv = nodes_[n.srcs[1]].value;
      if (nodes_[n.srcs[0]].needs_grad) {
        Tensor &d = GradBuf(n.srcs[0]);
        for (int r = 0; r < rows; ++r) {
          const double *gr = g.RowPtr(r);
          double *dr = d.RowPtr(r);
          for (int c = 0; c < cols; ++c) dr[c] += gr[c] * vv.data[c];
        }
      }
      if (nodes_[n.srcs[1]].needs_grad) {
        Tensor &d = GradBuf(n.srcs[1]);
        for (int r = 0; r < rows; ++r) {
          const double *gr = g.RowPtr(r);
          const double *ar = av.RowPtr(r);
          for (int c = 0; c < cols; ++c) d.data[c] += gr[c] * ar[c];
        }
      }
      break;
    }
    case Op::kAddColScalar: {
      int rows = n.value.shape[0], cols = n.value.shape[1];
      if (nodes_[n.srcs[0]].needs_grad) {
        Tensor &d = GradBuf(n.srcs[0]);
        for (size_t i = 0; i < d.data.size(); ++i) d.data[i] += g.data[i];
      }
      if (nodes_[n.srcs[1]].needs_grad) {
        Tensor &d = GradBuf(n.srcs[1]);
        for (int r = 0; r < rows; ++r) {
          const double *gr = g.RowPtr(r);
          double s = 0.0;
          for (int c = 0; c < cols; ++c) s += gr[c];
          d.data[r] += s;
        }
      }
      break;
    }
    case Op::kTanh: {
      if (nodes_[n.srcs[0]].needs_grad) {
        Tensor &d = GradBuf(n.srcs[0]);
        for (size_t i = 0; i < d.data.size(); ++i) {
          double y = n.value.data[i];
          d.data[i] += g.data[i] * (1.0 - y * y);
        }
      }
      break;
    }
    case Op::kSigmoid: {
      if (nodes_[n.srcs[0]].needs_grad) {
        Tensor &d = GradBuf(n.srcs[0]);
        for (size_t i = 0; i < d.data.size(); ++i) {
          double y = n.value.data[i];
          d.data[i] += g.data[i] * y * (1.0 - y);
        }
      }
      break;
    }
    case Op::kRowRange: {
      if (nodes_[n.srcs[0]].needs_grad) {
        Tensor &d = GradBuf(n.srcs[0]);
        int cols = d.shape[1];
        for (int r = n.i0; r < n.i1; ++r) {
          const double *gr = g.RowPtr(r - n.i0);
          double *dr = d.RowPtr(r);
          for (int c = 0; c < cols; ++c) dr[c] += gr[c];
        }
      }
      break;
    }
    case Op::kColRange: {
      if (nodes_[n.srcs[0]].needs_grad) {
        Tensor &d = GradBuf(n.srcs[0]);
        for (int r = 0; r < n.value.shape[0]; ++r) {
          const double *gr = g.RowPtr(r);
          double *dr = d.RowPtr(r);
          for (int c = n.i0; c < n.i1; ++c) dr[c] += gr[c - n.i0];
        }
      }
      break;
    }
    case Op::kConcatCols: {
      int off = 0;
      for (int sid : n.srcs) {
        Node &src = nodes_[sid];
        int w = src.value.shape[1];
        if (src.needs_grad) {
          Tensor &d = GradBuf(sid);
          for (int r = 0; r < n.value.shape[0]; ++r) {
            const double *gr = g.RowPtr(r) + off;
            double *dr = d.RowPtr(r);
            for (int c = 0; c < w; ++c) dr[c] += gr[c];
          }
        }
        off += w;
      }
      break;
    }
    case Op::kStackRows: {
      for (size_t i = 0; i < n.srcs.size(); ++i) {
        Node &src = nodes_[n.srcs[i]];
        if (!src.needs_grad) continue;
        Tensor &d = GradBuf(n.srcs[i]);
        const double *gr = g.RowPtr(static_cast<int>(i));
        for (size_t c = 0; c < d.data.size(); ++c) d.data[c] += gr[c];
      }
      break;
    }
    case Op::kSum: {
      if (nodes_[n.srcs[0]].needs_grad) {
        Tensor &d = GradBuf(n.srcs[0]);
        double gs = g.data[0];
        for (double &v : d.data) v += gs;
      }
      break;
    }
    case Op::kSumSq: {
      if (nodes_[n.srcs[0]].needs_grad) {
        Tensor &d = GradBuf(n.srcs[0]);
        const Tensor &av = nodes_[n.srcs[0]].value;
        double gs = g.data[0];
        for (size_t i = 0; i < d.data.size(); ++i) d.data[i] += 2.0 * gs * av.data[i];
      }
      break;
    }
  }
}

void Tape::Backward(Var loss, std::vector<Tensor> *grad_out) {
  Node &ln = At(loss);
  if (ln.value.NumEl() != 1)
    throw DataError("Backward requires a scalar loss, got " + ln.value.ShapeString());
  if (!std::isfinite(ln.value.data[0])) throw NumericError("loss is not finite");
  if (grad_out != nullptr && params_ != nullptr &&
      static_cast<int>(grad_out->size()) != params_->Size())
    throw ConfigError("grad_out buffer does not match parameter count");
  if (!ln.needs_grad) {
    // Loss does not depend on any parameter; gradients are identically zero.
    if (params_ != nullptr && grad_out == nullptr) params_->MarkGradsPopulated();
    return;
  }
  GradBuf(loss.id).data[0] = 1.0;
  for (int id = loss.id; id >= 0; --id) BackwardNode(id, grad_out);
  if (params_ != nullptr && grad_out == nullptr) {
    for (int i = 0; i < params_->Size(); ++i) {
      if (!params_->Grad(i).AllFinite())
        throw NumericError("NaN/Inf gradient for parameter '" + params_->Name(i) + "'");
    }
    params_->MarkGradsPopulated();
  }
}

}  // namespace artic
