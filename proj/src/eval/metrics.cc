// eval/metrics.cc

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

#include "eval/metrics.h"

#include <cmath>
#include <string>

#include "base/error.h"

namespace artic {

bool TryPearsonR(const double *a, const double *b, int n, double *r_out) {
  if (n < 2) return false;
  double mean_a = 0.0, mean_b = 0.0;
  for (int i = 0; i < n; ++i) {
    mean_a += a[i];
    mean_b += b[i];
  }
  mean_a /= n;
  mean_b /= n;
  double saa = 0.0, sbb = 0.0, sab = 0.0;
  for (int i = 0; i < n; ++i) {
    const double da = a[i] - mean_a, db = b[i] - mean_b;
    saa += da * da;
    sbb += db * db;
    sab += da * db;
  }
  if (saa <= 0.0 || sbb <= 0.0) return false;
  *r_out = sab / std::sqrt(saa * sbb);
  return true;
}

double PearsonR(const std::vector<double> &a, const std::vector<double> &b) {
  if (a.size() != b.size())
    throw DataError("pearson r: series lengths differ (" +
                    std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()) + ")");
  double r = 0.0;
  if (!TryPearsonR(a.data(), b.data(), static_cast<int>(a.size()), &r))
    throw NumericError(
        "pearson r undefined: series too short or zero variance");
  return r;
}

Tensor NormalizedRmse(const Tensor &pred, const Tensor &meas) {
  if (!pred.SameShape(meas))
    throw DataError("rmse: shape mismatch " + pred.ShapeString() + " vs " +
                    meas.ShapeString());
  if (pred.Rank() != 2) throw DataError("rmse: sequences must be rank-2");
  const int n = pred.Rows(), d = pred.Cols();
  Tensor out = Tensor::Zeros({d});
  for (int t = 0; t < n; ++t)
    for (int j = 0; j < d; ++j) {
      const double diff = pred.At(t, j) - meas.At(t, j);
      out.data[j] += diff * diff;
    }
  for (int j = 0; j < d; ++j) out.data[j] = std::sqrt(out.data[j] / n);
  return out;
}

}  // namespace artic
