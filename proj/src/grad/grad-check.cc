// grad/grad-check.cc

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

#include "grad/grad-check.h"

#include <algorithm>
#include <cmath>

namespace artic {

double FiniteDifferenceCheck(const std::function<double()> &loss,
                             ParameterSet &params, double step) {
  double worst = 0.0;
  for (int i = 0; i < params.Size(); ++i) {
    Tensor &p = params.Value(i);
    const Tensor &g = params.Grad(i);
    for (size_t j = 0; j < p.data.size(); ++j) {
      double saved = p.data[j];
      p.data[j] = saved + step;
      double up = loss();
      p.data[j] = saved - step;
      double down = loss();
      p.data[j] = saved;
      double numeric = (up - down) / (2.0 * step);
      double analytic = g.data[j];
      double denom = std::max({std::fabs(analytic), std::fabs(numeric), 1e-8});
      worst = std::max(worst, std::fabs(analytic - numeric) / denom);
    }
  }
  return worst;
}

}  // namespace artic
