// feat/mfcc.h

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

#ifndef ARTIC_FEAT_MFCC_H_
#define ARTIC_FEAT_MFCC_H_

#include <cstdint>
#include <vector>

#include "core/tensor.h"

namespace artic {

struct MfccConfig {
  double pre_emphasis = 0.97;
  double window_ms = 25.0;
  double hop_ms = 10.0;
  int num_mel_filters = 26;
  int num_ceps = 13;
  double log_floor = 1e-10;
  int delta_window = 2;  // regression half-width for AppendDeltas
};

// Frame count for a given audio length: floor((samples - window) / hop) + 1.
int NumFrames(int64_t num_samples, int window_samples, int hop_samples);

// Pre-emphasis, 25 ms Hamming frames at 10 ms hop, magnitude FFT, mel
// filterbank, log (floored), orthonormal DCT-II keeping c0..c12.
// Returns N x num_ceps.  Audio shorter than one window raises DataError.
Tensor ComputeMfcc(const std::vector<double> &samples, int sample_rate,
                   const MfccConfig &cfg = MfccConfig());

// Appends delta and delta-delta columns: N x D in, N x 3D out.
// Deltas use a +/-window regression with edge replication.
Tensor AppendDeltas(const Tensor &feats, int window = 2);

}  // namespace artic

#endif  // ARTIC_FEAT_MFCC_H_
