// feat/speaker-stats.h

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

#ifndef ARTIC_FEAT_SPEAKER_STATS_H_
#define ARTIC_FEAT_SPEAKER_STATS_H_

#include <string>
#include <vector>

#include "core/tensor.h"

namespace artic {

// Per-speaker, per-dimension mean and population standard deviation.
// Std is floored at kStdFloor so constant dimensions stay usable.
struct SpeakerStats {
  static constexpr double kStdFloor = 1e-8;

  std::string speaker;
  std::vector<double> mean;
  std::vector<double> stddev;

  int Dim() const { return static_cast<int>(mean.size()); }
};

// Fits stats over all frames of the given sequences.  Zero total frames or
// inconsistent dims raise DataError.
SpeakerStats FitSpeakerStats(const std::string &speaker,
                             const std::vector<const Tensor *> &sequences);

// (value - mean) / std per dimension.  Dim mismatch raises DataError.
Tensor ZNormalize(const Tensor &seq, const SpeakerStats &stats);

// Inverse of ZNormalize.
Tensor Denormalize(const Tensor &seq, const SpeakerStats &stats);

}  // namespace artic

#endif  // ARTIC_FEAT_SPEAKER_STATS_H_
