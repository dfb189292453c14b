// feat/speaker-stats.cc

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

#include "feat/speaker-stats.h"

#include <cmath>

#include "base/error.h"

namespace artic {

SpeakerStats FitSpeakerStats(const std::string &speaker,
                             const std::vector<const Tensor *> &sequences) {
  int dim = -1;
  int64_t total = 0;
  for (const Tensor *seq : sequences) {
    if (seq->Rows() == 0) continue;
    if (dim < 0) dim = seq->Cols();
    if (seq->Cols() != dim)
      throw DataError("FitSpeakerStats: inconsistent dims for speaker " + speaker);
    total += seq->Rows();
  }
  if (total == 0)
    throw DataError("FitSpeakerStats: no frames for speaker " + speaker);

  SpeakerStats stats;
  stats.speaker = speaker;
  stats.mean.assign(dim, 0.0);
  stats.stddev.assign(dim, 0.0);
  for (const Tensor *seq : sequences)
    for (int t = 0; t < seq->Rows(); ++t)
      for (int j = 0; j < dim; ++j) stats.mean[j] += seq->At(t, j);
  for (int j = 0; j < dim; ++j) stats.mean[j] /= static_cast<double>(total);
  for (const Tensor *seq : sequences)
    for (int t = 0; t < seq->Rows(); ++t)
      for (int j = 0; j < dim; ++j) {
        double d = seq->At(t, j) - stats.mean[j];
        stats.stddev[j] += d * d;
      }
  for (int j = 0; j < dim; ++j) {
    stats.stddev[j] = std::sqrt(stats.stddev[j] / static_cast<double>(total));
    if (stats.stddev[j] < SpeakerStats::kStdFloor)
      stats.stddev[j] = SpeakerStats::kStdFloor;
  }
  return stats;
}

Tensor ZNormalize(const Tensor &seq, const SpeakerStats &stats) {
  if (seq.Cols() != stats.Dim())
    throw DataError("ZNormalize: dim mismatch for speaker " + stats.speaker);
  Tensor out = seq;
  for (int t = 0; t < out.Rows(); ++t)
    for (int j = 0; j < out.Cols(); ++j)
      out.At(t, j) = (out.At(t, j) - stats.mean[j]) / stats.stddev[j];
  return out;
}

Tensor Denormalize(const Tensor &seq, const SpeakerStats &stats) {
  if (seq.Cols() != stats.Dim())
    throw DataError("Denormalize: dim mismatch for speaker " + stats.speaker);
  Tensor out = seq;
  for (int t = 0; t < out.Rows(); ++t)
    for (int j = 0; j < out.Cols(); ++j)
      out.At(t, j) = out.At(t, j) * stats.stddev[j] + stats.mean[j];
  return out;
}

}  // namespace artic
