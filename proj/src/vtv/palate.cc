// vtv/palate.cc

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

#include "vtv/palate.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "base/error.h"

namespace artic {

namespace {

double SqrtHypot(double u) { return std::sqrt(1.0 + u * u); }

// Antiderivative of sqrt(1 + u^2).
double ArcAnti(double u) { return 0.5 * (u * SqrtHypot(u) + std::asinh(u)); }

// Solves a symmetric 3x3 linear system via Gaussian elimination with
// partial pivoting.
void Solve3(double m[3][3], double rhs[3], double out[3]) {
  int idx[3] = {0, 1, 2};
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::fabs(m[idx[r]][col]) > std::fabs(m[idx[piv]][col])) piv = r;
    std::swap(idx[col], idx[piv]);
    double d = m[idx[col]][col];
    if (std::fabs(d) < 1e-300)
      throw DataError("FitPalate: degenerate normal equations");
    for (int r = col + 1; r < 3; ++r) {
      double f = m[idx[r]][col] / d;
      for (int c = col; c < 3; ++c) m[idx[r]][c] -= f * m[idx[col]][c];
      rhs[idx[r]] -= f * rhs[idx[col]];
    }
  }
  for (int col = 2; col >= 0; --col) {
    double v = rhs[idx[col]];
    for (int c = col + 1; c < 3; ++c) v -= m[idx[col]][c] * out[c];
    out[col] = v / m[idx[col]][col];
  }
}

}  // namespace

double PalateModel::ArcLength(double x) const {
  if (std::fabs(a) < 1e-12) {
    return SqrtHypot(b) * (x - x_min);
  }
  double u0 = 2.0 * a * x_min + b;
  double u1 = 2.0 * a * x + b;
  return (ArcAnti(u1) - ArcAnti(u0)) / (2.0 * a);
}

double PalateModel::MinDistance(double px, double py, double *x_at_min) const {
  auto dist2 = [&](double x) {
    double dy = Eval(x) - py;
    double dx = x - px;
    return dx * dx + dy * dy;
  };
  // Coarse scan, then Newton refinement on the derivative of dist2.
  const int kGrid = 128;
  double best_x = x_min, best_d = dist2(x_min);
  for (int i = 1; i <= kGrid; ++i) {
    double x = x_min + (x_max - x_min) * i / kGrid;
    double d = dist2(x);
    if (d < best_d) {
      best_d = d;
      best_x = x;
    }
  }
  double x = best_x;
  for (int it = 0; it < 50; ++it) {
    double fy = Eval(x) - py;
    double fp = Slope(x);
    double g = 2.0 * (x - px) + 2.0 * fy * fp;          // d/dx dist2
    double h = 2.0 + 2.0 * fp * fp + 4.0 * a * fy;      // d2/dx2 dist2
    if (std::fabs(h) < 1e-12) break;
    double step = g / h;
    double nx = std::clamp(x - step, x_min, x_max);
    if (nx == x) break;
    x = nx;
    if (std::fabs(step) < 1e-14) break;
  }
  if (dist2(x) > best_d) x = best_x;  // Newton diverged; keep grid best
  if (x_at_min != nullptr) *x_at_min = x;
  return std::sqrt(dist2(x));
}

PalateModel FitPalate(const std::vector<double> &xs,
                      const std::vector<double> &ys, int num_bins) {
  if (xs.size() != ys.size())
    throw DataError("FitPalate: x/y size mismatch");
  if (xs.empty()) throw DataError("FitPalate: no samples");
  double lo = *std::min_element(xs.begin(), xs.end());
  double hi = *std::max_element(xs.begin(), xs.end());
  double span = hi - lo;

  // Upper envelope: per x-bin, keep the sample with maximum y.
  std::vector<double> env_x, env_y;
  if (span <= 0.0) {
    env_x.push_back(xs[0]);
    env_y.push_back(*std::max_element(ys.begin(), ys.end()));
  } else {
    std::vector<int> best(num_bins, -1);
    for (size_t i = 0; i < xs.size(); ++i) {
      int b = std::min(num_bins - 1,
                       static_cast<int>((xs[i] - lo) / span * num_bins));
      if (best[b] < 0 || ys[i] > ys[best[b]]) best[b] = static_cast<int>(i);
    }
    for (int b = 0; b < num_bins; ++b)
      if (best[b] >= 0) {
        env_x.push_back(xs[best[b]]);
        env_y.push_back(ys[best[b]]);
      }
  }

  std::set<double> distinct(env_x.begin(), env_x.end());
  if (distinct.size() < 3)
    throw DataError("FitPalate: fewer than 3 distinct x values");

  // Centered least squares on y = A u^2 + B u + C with u = x - mean.
  double mean = 0.0;
  for (double x : env_x) mean += x;
  mean /= static_cast<double>(env_x.size());
  double s40 = 0, s30 = 0, s20 = 0, s10 = 0, s00 = static_cast<double>(env_x.size());
  double r2 = 0, r1 = 0, r0 = 0;
  for (size_t i = 0; i < env_x.size(); ++i) {
    double u = env_x[i] - mean, y = env_y[i];
    double u2 = u * u;
    s40 += u2 * u2;
    s30 += u2 * u;
    s20 += u2;
    s10 += u;
    r2 += u2 * y;
    r1 += u * y;
    r0 += y;
  }
  double m[3][3] = {{s40, s30, s20}, {s30, s20, s10}, {s20, s10, s00}};
  double rhs[3] = {r2, r1, r0};
  double abc[3];
  Solve3(m, rhs, abc);

  PalateModel p;
  p.a = abc[0];
  p.b = abc[1] - 2.0 * abc[0] * mean;
  p.c = abc[0] * mean * mean - abc[1] * mean + abc[2];
  p.x_min = lo;
  p.x_max = hi;
  double ss = 0.0;
  for (size_t i = 0; i < env_x.size(); ++i) {
    double e = p.Eval(env_x[i]) - env_y[i];
    ss += e * e;
  }
  p.rms_residual = std::sqrt(ss / static_cast<double>(env_x.size()));
  return p;
}

}  // namespace artic
