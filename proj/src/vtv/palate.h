// vtv/palate.h

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

#ifndef ARTIC_VTV_PALATE_H_
#define ARTIC_VTV_PALATE_H_

#include <vector>

namespace artic {

// Second-degree polynomial palate curve y = a*x^2 + b*x + c over a fit
// domain [x_min, x_max].
struct PalateModel {
  double a = 0.0, b = 0.0, c = 0.0;
  double x_min = 0.0, x_max = 0.0;
  double rms_residual = 0.0;

  double Eval(double x) const { return (a * x + b) * x + c; }
  double Slope(double x) const { return 2.0 * a * x + b; }

  // Arc length along the curve from x_min to x (closed form).
  double ArcLength(double x) const;

  // Minimum Euclidean distance from (px, py) to the curve over the fit
  // domain.  Returns the distance and stores the minimizing x.
  double MinDistance(double px, double py, double *x_at_min) const;
};

// Least-squares quadratic fit to the upper envelope of tongue measurement
// points.  The envelope keeps, per x-bin, the sample with maximum y; the
// fit then runs on those samples.  Fewer than 3 distinct x values raise
// DataError.
PalateModel FitPalate(const std::vector<double> &xs,
                      const std::vector<double> &ys, int num_bins = 64);

}  // namespace artic

#endif  // ARTIC_VTV_PALATE_H_
