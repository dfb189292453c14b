// feat/wav.h

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

#ifndef ARTIC_FEAT_WAV_H_
#define ARTIC_FEAT_WAV_H_

#include <string>
#include <vector>

namespace artic {

struct WavData {
  int sample_rate = 0;
  std::vector<double> samples;  // mono, scaled to [-1, 1)
};

// Reads a RIFF/WAVE file.  Only 16-bit PCM mono is accepted; anything else
// raises DataError.  Unknown chunks are skipped.
WavData ReadWav(const std::string &path);

// Writes 16-bit PCM mono.  Samples are clipped to [-1, 1) before quantizing.
void WriteWav(const std::string &path, const WavData &wav);

}  // namespace artic

#endif  // ARTIC_FEAT_WAV_H_
