// vtv/vtv-extract.h

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

#ifndef ARTIC_VTV_VTV_EXTRACT_H_
#define ARTIC_VTV_VTV_EXTRACT_H_

#include <cstdint>
#include <vector>

#include "core/tensor.h"
#include "vtv/palate.h"

namespace artic {

// Pellet trajectory column layout: 8 pellets, x then y each.
enum PelletColumn {
  kUlX = 0, kUlY,    // upper lip
  kLlX, kLlY,        // lower lip
  kT1X, kT1Y,        // tongue tip
  kT2X, kT2Y,
  kT3X, kT3Y,
  kT4X, kT4Y,        // tongue body (dorsum)
  kMniX, kMniY,      // mandible incisor
  kMnmX, kMnmY,      // mandible molar
};
constexpr int kNumPelletDims = 16;

// Vocal tract variable column layout (canonical order).
enum VtvColumn { kLp = 0, kLa, kTtcl, kTtcd, kTbcl, kTbcd };
constexpr int kNumVtvs = 6;

extern const char *const kVtvNames[kNumVtvs];
extern const char *const kPelletDimNames[kNumPelletDims];

// Converts a pellet trajectory matrix (N x 16) to vocal tract variables
// (N x 6):
//   LP    upper-lip x displacement from lip_x_origin (speaker mean)
//   LA    Euclidean upper-lip/lower-lip distance
//   TTCD  minimum distance of the tongue-tip pellet (T1) to the palate
//   TTCL  arc-length position along the palate of that closest point
//   TBCD/TBCL  same for the tongue-body pellet (T4)
// Pellets with x outside the palate fit domain are clamped to the domain
// edge; such frames are flagged in frame_flags when provided.
Tensor PelletsToVtvs(const Tensor &pellets, const PalateModel &palate,
                     double lip_x_origin,
                     std::vector<uint8_t> *frame_flags = nullptr);

// Pools tongue pellet samples (T1..T4 x/y) from pellet frames for palate
// fitting.
void CollectTongueSamples(const Tensor &pellets, std::vector<double> *xs,
                          std::vector<double> *ys);

}  // namespace artic

#endif  // ARTIC_VTV_VTV_EXTRACT_H_
