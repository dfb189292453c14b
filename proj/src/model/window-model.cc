// model/window-model.cc

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

#include "model/window-model.h"

#include "base/error.h"

namespace artic {

void WindowModel::RequireTrained() const {
  if (Params().StepCount() == 0)
    throw ConfigError("model has not been trained (step count is zero)");
}

Tensor GenerateSequence(const WindowModel &model, const AlignedUtterance &utt) {
  std::vector<FramePair> pairs;
  pairs.reserve(utt.NumFrames());
  for (int t = 0; t < utt.NumFrames(); ++t) pairs.push_back({&utt, t});
  return model.Generate(AssembleWindowBatch(pairs, model.Context()));
}

}  // namespace artic
