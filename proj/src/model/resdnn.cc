// model/resdnn.cc

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

#include "model/resdnn.h"

#include "base/error.h"
#include "core/kernels.h"
#include "model/dense-stack.h"
#include "model/losses.h"

namespace artic {

Tensor ResidualLayer(const Tensor &z_window, const Tensor &w) {
  if (z_window.Rank() != 2)
    throw DataError("residual layer: window must be rank-2");
  const int span = z_window.Rows(), g = z_window.Cols();
  if (w.NumEl() != static_cast<int64_t>(span) * g)
    throw DataError("residual layer: weight length " +
                    std::to_string(w.NumEl()) + " != window size " +
                    std::to_string(span * g));
  if (span % 2 == 0) throw DataError("residual layer: even window span");
  double r = 0.0;
  for (int s = 0; s < span; ++s)
    for (int j = 0; j < g; ++j) r += z_window.At(s, j) * w.data[s * g + j];
  const int center = span / 2;
  Tensor out({g});
  for (int j = 0; j < g; ++j) out.data[j] = z_window.At(center, j) + r;
  return out;
}

ResDnnModel::ResDnnModel(const ResDnnConfig &cfg, uint64_t seed) : cfg_(cfg) {
  if (cfg.context < 0) throw ConfigError("residual net: negative context");
  if (cfg.trunk_widths.empty())
    throw ConfigError("residual net: trunk needs at least one hidden layer");
  if (cfg.lambda_w < 0.0) throw ConfigError("residual net: negative lambda_w");
  const int window_dim = cfg.prior_dim * (2 * cfg.context + 1);
  const int res_cols = cfg.per_component ? cfg.prior_dim : 1;
  // Zero start makes the layer the identity on the center frame; training
  // moves it away only where the reconstruction demands.
  params_.Add("res.w", Tensor::Zeros({window_dim, res_cols}));
  std::vector<int> trunk = cfg.trunk_widths;
  trunk.push_back(cfg.obs_dim);
  AddDenseStack(&params_, "trunk", cfg.prior_dim, trunk, seed);
  trunk_layers_ = static_cast<int>(trunk.size());
}

Var ResDnnModel::BuildLoss(Tape *tape, const WindowBatch &batch) {
  const int b = batch.Rows();
  Var z_win = tape->Input(batch.z_win);
  Var z = tape->Input(batch.z);
  Var x = tape->Input(batch.x);
  Var w = tape->Param("res.w");
  Var r = tape->MatMul(z_win, w);  // [B x 1] or [B x G]
  Var zhat = cfg_.per_component ? tape->Add(z, r) : tape->AddColScalar(z, r);
  Var xhat = ApplyDenseStack(tape, "trunk", trunk_layers_, zhat);
  Var loss = tape->Scale(tape->SumSq(tape->Sub(x, xhat)), 1.0 / b);
  return tape->Add(loss, tape->Scale(tape->SumSq(w), cfg_.lambda_w));
}

Tensor ResDnnModel::CorrectedPriors(const WindowBatch &batch) const {
  const Tensor &w = params_.Value("res.w");
  if (batch.z_win.Cols() != w.Rows())
    throw DataError("residual net: window dim mismatch");
  Tensor r({batch.Rows(), w.Cols()});
  kernels::MatMulNN(batch.z_win.RowPtr(0), w.RowPtr(0), r.RowPtr(0),
                    batch.Rows(), w.Rows(), w.Cols());
  Tensor out = batch.z;
  for (int i = 0; i < out.Rows(); ++i)
    for (int j = 0; j < out.Cols(); ++j)
      out.At(i, j) += cfg_.per_component ? r.At(i, j) : r.At(i, 0);
  return out;
}

double ResDnnModel::MonitorError(const WindowBatch &batch) const {
  Tensor xhat =
      EvalDenseStack(params_, "trunk", trunk_layers_, CorrectedPriors(batch));
  return SupervisedLoss(xhat, batch.x) * batch.x.Cols();
}

Tensor ResDnnModel::Generate(const WindowBatch &batch) const {
  RequireTrained();
  return CorrectedPriors(batch);
}

void ResDnnModel::LoadParams(const std::string &path) {
  ParameterSet loaded = ParameterSet::Load(path);
  if (!SameLayout(params_, loaded))
    throw DataError("residual net: checkpoint layout mismatch: " + path);
  params_ = std::move(loaded);
}

}  // namespace artic
