// model/context-window.cc

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

#include "model/context-window.h"

#include <algorithm>
#include <cstring>

#include "base/error.h"

namespace artic {

namespace {

// Copies the window for center t into out ((2T+1)*dim doubles).
void CopyWindow(const Tensor &seq, int t, int half_width, double *out) {
  const int n = seq.Rows(), dim = seq.Cols();
  for (int dt = -half_width; dt <= half_width; ++dt) {
    int src = std::clamp(t + dt, 0, n - 1);
    std::memcpy(out + (dt + half_width) * dim, seq.RowPtr(src),
                sizeof(double) * dim);
  }
}

}  // namespace

Tensor WindowedRow(const Tensor &seq, int t, int half_width) {
  if (t < 0 || t >= seq.Rows())
    throw DataError("window center out of range");
  Tensor out({1, (2 * half_width + 1) * seq.Cols()});
  CopyWindow(seq, t, half_width, out.RowPtr(0));
  return out;
}

Tensor WindowedRows(const Tensor &seq, const std::vector<int> &centers,
                    int half_width) {
  Tensor out({static_cast<int>(centers.size()),
              (2 * half_width + 1) * seq.Cols()});
  for (size_t i = 0; i < centers.size(); ++i) {
    if (centers[i] < 0 || centers[i] >= seq.Rows())
      throw DataError("window center out of range");
    CopyWindow(seq, centers[i], half_width, out.RowPtr(static_cast<int>(i)));
  }
  return out;
}

Tensor WindowedAll(const Tensor &seq, int half_width) {
  Tensor out({seq.Rows(), (2 * half_width + 1) * seq.Cols()});
  for (int t = 0; t < seq.Rows(); ++t)
    CopyWindow(seq, t, half_width, out.RowPtr(t));
  return out;
}

std::vector<FramePair> CollectFramePairs(
    const std::vector<const AlignedUtterance *> &utts) {
  std::vector<FramePair> pairs;
  for (const AlignedUtterance *utt : utts)
    for (int t = 0; t < utt->NumFrames(); ++t) pairs.push_back({utt, t});
  return pairs;
}

WindowBatch AssembleWindowBatch(const std::vector<FramePair> &pairs,
                                int half_width) {
  if (pairs.empty()) throw DataError("empty window batch");
  const int b = static_cast<int>(pairs.size());
  const int obs = pairs[0].utt->acoustics.Cols();
  const int g = pairs[0].utt->priors.Cols();
  const int span = 2 * half_width + 1;

  WindowBatch batch;
  batch.x_win = Tensor({b, obs * span});
  batch.z_win = Tensor({b, g * span});
  batch.x = Tensor({b, obs});
  batch.z = Tensor({b, g});
  for (int i = 0; i < b; ++i) {
    const AlignedUtterance &utt = *pairs[i].utt;
    const int t = pairs[i].t;
    if (utt.acoustics.Cols() != obs || utt.priors.Cols() != g)
      throw DataError("inconsistent dims across window batch");
    CopyWindow(utt.acoustics, t, half_width, batch.x_win.RowPtr(i));
    CopyWindow(utt.priors, t, half_width, batch.z_win.RowPtr(i));
    std::memcpy(batch.x.RowPtr(i), utt.acoustics.RowPtr(t),
                sizeof(double) * obs);
    std::memcpy(batch.z.RowPtr(i), utt.priors.RowPtr(t), sizeof(double) * g);
  }
  return batch;
}

}  // namespace artic
