// feat/feature-file.h

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

#ifndef ARTIC_FEAT_FEATURE_FILE_H_
#define ARTIC_FEAT_FEATURE_FILE_H_

#include <cstdint>
#include <string>

#include "core/tensor.h"

namespace artic {

constexpr int kDefaultFramePeriodUs = 10000;  // 10 ms grid

// Acoustic feature file: magic "AFEA", version u32, dims u32,
// frame-period-us u32, frame-count u32, then row-major f32 payload (LE).
struct FeatureFile {
  Tensor frames;  // N x D
  int frame_period_us = kDefaultFramePeriodUs;
};

void WriteFeatureFile(const std::string &path, const Tensor &frames,
                      int frame_period_us = kDefaultFramePeriodUs);
FeatureFile ReadFeatureFile(const std::string &path);

// Articulatory track file: same layout with magic "AART" plus a kind byte
// between the header and the payload.
enum class TrackKind : uint8_t {
  kPellets = 0,  // 16-dim pellet x-y trajectories
  kVtv = 1,      // 6-dim vocal tract variables
  kPriors = 2,   // 10-dim articulatory feature vectors
};

struct TrackFile {
  Tensor frames;
  int frame_period_us = kDefaultFramePeriodUs;
  TrackKind kind = TrackKind::kVtv;
};

void WriteTrackFile(const std::string &path, const Tensor &frames,
                    TrackKind kind,
                    int frame_period_us = kDefaultFramePeriodUs);
TrackFile ReadTrackFile(const std::string &path);

// Linear resampling of a track onto a new frame grid.  Sample i of the
// output is taken at time i * to_period, interpolating between source
// frames and clamping at the ends.
Tensor ResampleTrack(const Tensor &frames, int from_period_us,
                     int to_period_us, int out_frames);

}  // namespace artic

#endif  // ARTIC_FEAT_FEATURE_FILE_H_
