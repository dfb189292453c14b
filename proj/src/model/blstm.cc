// model/blstm.cc

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

#include "model/blstm.h"

#include <cstring>
#include <vector>

#include "base/error.h"
#include "base/rng.h"
#include "core/kernels.h"
#include "model/dense-stack.h"

namespace artic {

namespace {

// Gate order within the 4H axis: input, forget, candidate, output.
std::string LayerPrefix(int layer, bool fwd) {
  return "l" + std::to_string(layer) + (fwd ? ".fwd" : ".bwd");
}

}  // namespace

BlstmModel::BlstmModel(const BlstmConfig &cfg, uint64_t seed) : cfg_(cfg) {
  if (cfg.num_layers < 1 || cfg.hidden < 1 || cfg.input_dim < 1 ||
      cfg.output_dim < 1)
    throw ConfigError("blstm: all dims must be positive");
  const int h = cfg.hidden;
  for (int l = 0; l < cfg.num_layers; ++l) {
    const int in = l == 0 ? cfg.input_dim : 2 * h;
    for (bool fwd : {true, false}) {
      std::string p = LayerPrefix(l, fwd);
      params_.Add(p + ".wx", LinearInit(in, 4 * h, MixSeed(seed, p + ".wx")));
      params_.Add(p + ".wh", LinearInit(h, 4 * h, MixSeed(seed, p + ".wh")));
      params_.Add(p + ".b", Tensor::Zeros({4 * h}));
      params_.Add(p + ".pi", Tensor::Zeros({h}));
      params_.Add(p + ".pf", Tensor::Zeros({h}));
      params_.Add(p + ".po", Tensor::Zeros({h}));
    }
  }
  params_.Add("head.w",
              LinearInit(2 * h, cfg.output_dim, MixSeed(seed, "head.w")));
  params_.Add("head.b", Tensor::Zeros({cfg.output_dim}));
}

Var BlstmModel::BuildOutputs(Tape *tape, const Tensor &seq) const {
  if (seq.Rows() < 1) throw DataError("blstm: empty sequence");
  if (seq.Cols() != cfg_.input_dim)
    throw DataError("blstm: input dim " + std::to_string(seq.Cols()) +
                    " != configured " + std::to_string(cfg_.input_dim));
  const int n = seq.Rows(), h = cfg_.hidden;

  Var cur = tape->Input(seq);
  for (int l = 0; l < cfg_.num_layers; ++l) {
    std::vector<Var> dir_stacks;
    for (bool fwd : {true, false}) {
      std::string p = LayerPrefix(l, fwd);
      Var wx = tape->Param(p + ".wx");
      Var wh = tape->Param(p + ".wh");
      Var b = tape->Param(p + ".b");
      Var pi = tape->Param(p + ".pi");
      Var pf = tape->Param(p + ".pf");
      Var po = tape->Param(p + ".po");
      Var xw = tape->MatMul(cur, wx);  // [N x 4H]

      Var hv = tape->Input(Tensor::Zeros({1, h}));
      Var cv = tape->Input(Tensor::Zeros({1, h}));
      std::vector<Var> states(n);
      for (int step = 0; step < n; ++step) {
        const int t = fwd ? step : n - 1 - step;
        Var pre = tape->AddRowVec(
            tape->Add(tape->Row(xw, t), tape->MatMul(hv, wh)), b);
        Var ig = tape->Sigmoid(tape->Add(tape->ColRange(pre, 0, h),
                                         tape->MulRowVec(cv, pi)));
        Var fg = tape->Sigmoid(tape->Add(tape->ColRange(pre, h, 2 * h),
                                         tape->MulRowVec(cv, pf)));
        Var gg = tape->Tanh(tape->ColRange(pre, 2 * h, 3 * h));
        cv = tape->Add(tape->Mul(fg, cv), tape->Mul(ig, gg));
        Var og = tape->Sigmoid(tape->Add(tape->ColRange(pre, 3 * h, 4 * h),
                                         tape->MulRowVec(cv, po)));
        hv = tape->Mul(og, tape->Tanh(cv));
        states[t] = hv;
      }
      dir_stacks.push_back(tape->StackRows(states));
    }
    cur = tape->ConcatCols(dir_stacks);  // [N x 2H]
  }
  return tape->AddRowVec(tape->MatMul(cur, tape->Param("head.w")),
                         tape->Param("head.b"));
}

Var BlstmModel::BuildLoss(Tape *tape, const Tensor &seq,
                          const Tensor &target) const {
  if (target.Rows() != seq.Rows() || target.Cols() != cfg_.output_dim)
    throw DataError("blstm: target shape mismatch");
  Var out = BuildOutputs(tape, seq);
  Var diff = tape->Sub(out, tape->Input(target));
  return tape->Scale(tape->SumSq(diff),
                     1.0 / static_cast<double>(target.NumEl()));
}

Tensor BlstmModel::Forward(const Tensor &seq) const {
  if (seq.Rows() < 1) throw DataError("blstm: empty sequence");
  if (seq.Cols() != cfg_.input_dim)
    throw DataError("blstm: input dim " + std::to_string(seq.Cols()) +
                    " != configured " + std::to_string(cfg_.input_dim));
  const int n = seq.Rows(), h = cfg_.hidden;

  Tensor cur = seq;
  std::vector<double> pre(4 * h), hw(4 * h), gate(h), cv(h), hv(h);
  for (int l = 0; l < cfg_.num_layers; ++l) {
    Tensor next({n, 2 * h});
    for (bool fwd : {true, false}) {
      std::string p = LayerPrefix(l, fwd);
      const Tensor &wx = params_.Value(p + ".wx");
      const Tensor &wh = params_.Value(p + ".wh");
      const Tensor &b = params_.Value(p + ".b");
      const Tensor &pi = params_.Value(p + ".pi");
      const Tensor &pf = params_.Value(p + ".pf");
      const Tensor &po = params_.Value(p + ".po");

      Tensor xw({n, 4 * h});
      kernels::MatMulNN(cur.RowPtr(0), wx.RowPtr(0), xw.RowPtr(0), n,
                        cur.Cols(), 4 * h);
      std::fill(cv.begin(), cv.end(), 0.0);
      std::fill(hv.begin(), hv.end(), 0.0);
      const int col0 = fwd ? 0 : h;
      for (int step = 0; step < n; ++step) {
        const int t = fwd ? step : n - 1 - step;
        kernels::MatMulNN(hv.data(), wh.RowPtr(0), hw.data(), 1, h, 4 * h);
        for (int j = 0; j < 4 * h; ++j)
          pre[j] = xw.At(t, j) + hw[j] + b.data[j];

        for (int j = 0; j < h; ++j) gate[j] = pre[j] + cv[j] * pi.data[j];
        kernels::Sigmoid(gate.data(), gate.data(), h);
        std::vector<double> ig = gate;
        for (int j = 0; j < h; ++j) gate[j] = pre[h + j] + cv[j] * pf.data[j];
        kernels::Sigmoid(gate.data(), gate.data(), h);
        std::vector<double> fg = gate;
        kernels::Tanh(pre.data() + 2 * h, gate.data(), h);
        for (int j = 0; j < h; ++j) cv[j] = fg[j] * cv[j] + ig[j] * gate[j];
        for (int j = 0; j < h; ++j)
          gate[j] = pre[3 * h + j] + cv[j] * po.data[j];
        kernels::Sigmoid(gate.data(), gate.data(), h);
        for (int j = 0; j < h; ++j) {
          double tc = std::tanh(cv[j]);
          hv[j] = gate[j] * tc;
          next.At(t, col0 + j) = hv[j];
        }
      }
    }
    cur = std::move(next);
  }

  const Tensor &head_w = params_.Value("head.w");
  const Tensor &head_b = params_.Value("head.b");
  Tensor out({n, cfg_.output_dim});
  kernels::MatMulNN(cur.RowPtr(0), head_w.RowPtr(0), out.RowPtr(0), n, 2 * h,
                    cfg_.output_dim);
  for (int t = 0; t < n; ++t)
    for (int j = 0; j < cfg_.output_dim; ++j) out.At(t, j) += head_b.data[j];
  return out;
}

void BlstmModel::LoadParams(const std::string &path) {
  ParameterSet loaded = ParameterSet::Load(path);
  if (!SameLayout(params_, loaded))
    throw DataError("blstm: checkpoint layout mismatch: " + path);
  params_ = std::move(loaded);
}

}  // namespace artic
