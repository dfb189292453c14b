// feat/spectrum.cc

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

#include "feat/spectrum.h"

#include <cmath>

#include "base/error.h"

namespace artic {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

int NextPowerOfTwo(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

void Fft(std::vector<double> *re, std::vector<double> *im) {
  const size_t n = re->size();
  if (im->size() != n || (n & (n - 1)) != 0 || n == 0)
    throw NumericError("Fft requires equal power-of-two sizes");
  std::vector<double> &xr = *re, &xi = *im;
  // Bit-reversal permutation.
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) {
      std::swap(xr[i], xr[j]);
      std::swap(xi[i], xi[j]);
    }
  }
  // Danielson-Lanczos butterflies.
  for (size_t len = 2; len <= n; len <<= 1) {
    double ang = -2.0 * kPi / static_cast<double>(len);
    double wr0 = std::cos(ang), wi0 = std::sin(ang);
    for (size_t i = 0; i < n; i += len) {
      double wr = 1.0, wi = 0.0;
      for (size_t k = 0; k < len / 2; ++k) {
        size_t a = i + k, b = i + k + len / 2;
        double tr = xr[b] * wr - xi[b] * wi;
        double ti = xr[b] * wi + xi[b] * wr;
        xr[b] = xr[a] - tr;
        xi[b] = xi[a] - ti;
        xr[a] += tr;
        xi[a] += ti;
        double nwr = wr * wr0 - wi * wi0;
        wi = wr * wi0 + wi * wr0;
        wr = nwr;
      }
    }
  }
}

std::vector<double> HammingWindow(int n) {
  std::vector<double> w(n);
  if (n == 1) {
    w[0] = 1.0;
    return w;
  }
  for (int i = 0; i < n; ++i)
    w[i] = 0.54 - 0.46 * std::cos(2.0 * kPi * i / (n - 1));
  return w;
}

double HzToMel(double hz) { return 1127.0 * std::log(1.0 + hz / 700.0); }

double MelToHz(double mel) { return 700.0 * (std::exp(mel / 1127.0) - 1.0); }

Tensor MelFilterbank(int num_filters, int fft_size, double sample_rate,
                     double low_hz, double high_hz) {
  const int num_bins = fft_size / 2 + 1;
  Tensor fb = Tensor::Zeros({num_filters, num_bins});
  double low_mel = HzToMel(low_hz);
  double high_mel = HzToMel(high_hz);
  std::vector<double> corners(num_filters + 2);
  for (int i = 0; i < num_filters + 2; ++i)
    corners[i] = MelToHz(low_mel + (high_mel - low_mel) * i / (num_filters + 1));
  for (int m = 0; m < num_filters; ++m) {
    double left = corners[m], center = corners[m + 1], right = corners[m + 2];
    for (int k = 0; k < num_bins; ++k) {
      double f = k * sample_rate / fft_size;
      double w = 0.0;
      if (f > left && f < center)
        w = (f - left) / (center - left);
      else if (f >= center && f < right)
        w = (right - f) / (right - center);
      fb.At(m, k) = w;
    }
  }
  return fb;
}

Tensor DctMatrix(int num_rows, int num_cols) {
  if (num_rows > num_cols)
    throw NumericError("DctMatrix: more rows than columns");
  Tensor d({num_rows, num_cols});
  double norm0 = std::sqrt(1.0 / num_cols);
  double norm = std::sqrt(2.0 / num_cols);
  for (int i = 0; i < num_rows; ++i)
    for (int j = 0; j < num_cols; ++j)
      d.At(i, j) = (i == 0 ? norm0 : norm) *
                   (i == 0 ? 1.0 : std::cos(kPi / num_cols * (j + 0.5) * i));
  return d;
}

}  // namespace artic
