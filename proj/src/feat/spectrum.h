// feat/spectrum.h

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

#ifndef ARTIC_FEAT_SPECTRUM_H_
#define ARTIC_FEAT_SPECTRUM_H_

#include <vector>

#include "core/tensor.h"

namespace artic {

int NextPowerOfTwo(int n);

// In-place radix-2 FFT.  re/im must have equal power-of-two size.
void Fft(std::vector<double> *re, std::vector<double> *im);

std::vector<double> HammingWindow(int n);

double HzToMel(double hz);
double MelToHz(double mel);

// Triangular mel filterbank, rows = filters, cols = fft_size/2 + 1 bins.
// Filters are evaluated at bin center frequencies with mel-spaced corners
// spanning [low_hz, high_hz].
Tensor MelFilterbank(int num_filters, int fft_size, double sample_rate,
                     double low_hz, double high_hz);

// Orthonormal DCT-II matrix, num_rows x num_cols (num_rows <= num_cols).
// Rows are mutually orthonormal: D * D^T = I.
Tensor DctMatrix(int num_rows, int num_cols);

}  // namespace artic

#endif  // ARTIC_FEAT_SPECTRUM_H_
