// model/context-window.h

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

#ifndef ARTIC_MODEL_CONTEXT_WINDOW_H_
#define ARTIC_MODEL_CONTEXT_WINDOW_H_

#include <vector>

#include "core/tensor.h"
#include "data/corpus.h"

namespace artic {

// Concatenation of frames t-T..t+T of seq (edge frames replicated) as one
// row of length (2T+1) * dim.
Tensor WindowedRow(const Tensor &seq, int t, int half_width);

// One windowed row per requested center frame: [B x (2T+1)*dim].
Tensor WindowedRows(const Tensor &seq, const std::vector<int> &centers,
                    int half_width);

// Windowed rows for every frame of the sequence: [N x (2T+1)*dim].
Tensor WindowedAll(const Tensor &seq, int half_width);

// One frame of an utterance used as a training sample.
struct FramePair {
  const AlignedUtterance *utt = nullptr;
  int t = 0;
};

// All frames of the given utterances in manifest order.
std::vector<FramePair> CollectFramePairs(
    const std::vector<const AlignedUtterance *> &utts);

// Assembled model inputs for a minibatch of frame pairs.
struct WindowBatch {
  Tensor x_win;  // [B x obs*(2T+1)]   windowed acoustics
  Tensor z_win;  // [B x G*(2T+1)]     windowed priors
  Tensor x;      // [B x obs]          center acoustic frames
  Tensor z;      // [B x G]            center prior frames
  int Rows() const { return x.Rows(); }
};

WindowBatch AssembleWindowBatch(const std::vector<FramePair> &pairs,
                                int half_width);

}  // namespace artic

#endif  // ARTIC_MODEL_CONTEXT_WINDOW_H_
