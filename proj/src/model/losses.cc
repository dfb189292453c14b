// model/losses.cc

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

#include "model/losses.h"

#include "base/error.h"

namespace artic {

namespace {

double SumSqDiff(const Tensor &a, const Tensor &b, const char *what) {
  if (!a.SameShape(b)) throw DataError(std::string(what) + ": shape mismatch");
  double acc = 0.0;
  for (size_t i = 0; i < a.data.size(); ++i) {
    double d = a.data[i] - b.data[i];
    acc += d * d;
  }
  return acc;
}

}  // namespace

double SupervisedLoss(const Tensor &pred, const Tensor &target) {
  return SumSqDiff(pred, target, "supervised loss") /
         static_cast<double>(pred.NumEl());
}

double Ae1Loss(const Tensor &x_win, const Tensor &xhat_win, const Tensor &z,
               const Tensor &zhat, double lambda_z) {
  return SumSqDiff(x_win, xhat_win, "ae1 acoustic term") +
         lambda_z * SumSqDiff(z, zhat, "ae1 prior term");
}

double Ae2Loss(const Tensor &z_win, const Tensor &zhat_win, const Tensor &x,
               const Tensor &xhat, double lambda_x) {
  return SumSqDiff(z_win, zhat_win, "ae2 prior term") +
         lambda_x * SumSqDiff(x, xhat, "ae2 acoustic term");
}

double ResdnnLoss(const Tensor &x, const Tensor &xhat, const Tensor &w,
                  double lambda_w) {
  double wsq = 0.0;
  for (double v : w.data) wsq += v * v;
  return SumSqDiff(x, xhat, "residual net acoustic term") + lambda_w * wsq;
}

}  // namespace artic
