// model/losses.h

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

#ifndef ARTIC_MODEL_LOSSES_H_
#define ARTIC_MODEL_LOSSES_H_

#include "core/tensor.h"

namespace artic {

// Mean squared error over frames and dims.
double SupervisedLoss(const Tensor &pred, const Tensor &target);

// ||x_win - xhat_win||^2 + lambda_z * ||z - zhat||^2 (squared Euclidean
// norms over all entries, no averaging).
double Ae1Loss(const Tensor &x_win, const Tensor &xhat_win, const Tensor &z,
               const Tensor &zhat, double lambda_z);

// ||z_win - zhat_win||^2 + lambda_x * ||x - xhat||^2.
double Ae2Loss(const Tensor &z_win, const Tensor &zhat_win, const Tensor &x,
               const Tensor &xhat, double lambda_x);

// ||x - xhat||^2 + lambda_w * ||w||^2.
double ResdnnLoss(const Tensor &x, const Tensor &xhat, const Tensor &w,
                  double lambda_w);

}  // namespace artic

#endif  // ARTIC_MODEL_LOSSES_H_
