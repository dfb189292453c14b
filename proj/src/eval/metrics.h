// eval/metrics.h

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

#ifndef ARTIC_EVAL_METRICS_H_
#define ARTIC_EVAL_METRICS_H_

#include <vector>

#include "core/tensor.h"

namespace artic {

// Pearson product-moment correlation of two length-n series.  Undefined
// when n < 2 or either series has zero variance; TryPearsonR reports that
// as false, PearsonR throws NumericError.
bool TryPearsonR(const double *a, const double *b, int n, double *r_out);
double PearsonR(const std::vector<double> &a, const std::vector<double> &b);

// Per-feature root mean squared error between two N x D series (column d
// of the result covers feature d).  Shape mismatch raises DataError.
// Callers feed per-speaker z-normalized sequences, making this the
// normalized RMSE used throughout the reports.
Tensor NormalizedRmse(const Tensor &pred, const Tensor &meas);

}  // namespace artic

#endif  // ARTIC_EVAL_METRICS_H_
