// vtv/vtv-extract.cc

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

#include "vtv/vtv-extract.h"

#include <cmath>

#include "base/error.h"

namespace artic {

const char *const kVtvNames[kNumVtvs] = {"LP",   "LA",   "TTCL",
                                         "TTCD", "TBCL", "TBCD"};

const char *const kPelletDimNames[kNumPelletDims] = {
    "UL_x",  "UL_y",  "LL_x",  "LL_y", "T1_x", "T1_y", "T2_x", "T2_y",
    "T3_x",  "T3_y",  "T4_x",  "T4_y", "MNI_x", "MNI_y", "MNM_x", "MNM_y"};

Tensor PelletsToVtvs(const Tensor &pellets, const PalateModel &palate,
                     double lip_x_origin,
                     std::vector<uint8_t> *frame_flags) {
  if (pellets.Cols() != kNumPelletDims)
    throw DataError("PelletsToVtvs: expected 16 pellet columns, got " +
                    std::to_string(pellets.Cols()));
  const int n = pellets.Rows();
  Tensor out({n, kNumVtvs});
  if (frame_flags != nullptr) frame_flags->assign(n, 0);
  for (int t = 0; t < n; ++t) {
    double ulx = pellets.At(t, kUlX), uly = pellets.At(t, kUlY);
    double llx = pellets.At(t, kLlX), lly = pellets.At(t, kLlY);
    double t1x = pellets.At(t, kT1X), t1y = pellets.At(t, kT1Y);
    double t4x = pellets.At(t, kT4X), t4y = pellets.At(t, kT4Y);

    out.At(t, kLp) = ulx - lip_x_origin;
    out.At(t, kLa) = std::hypot(ulx - llx, uly - lly);

    bool clamped = false;
    for (int pellet = 0; pellet < 2; ++pellet) {
      double px = pellet == 0 ? t1x : t4x;
      double py = pellet == 0 ? t1y : t4y;
      if (px < palate.x_min || px > palate.x_max) clamped = true;
      double x_at_min = 0.0;
      double d = palate.MinDistance(px, py, &x_at_min);
      double s = palate.ArcLength(x_at_min);
      if (pellet == 0) {
        out.At(t, kTtcd) = d;
        out.At(t, kTtcl) = s;
      } else {
        out.At(t, kTbcd) = d;
        out.At(t, kTbcl) = s;
      }
    }
    if (clamped && frame_flags != nullptr) (*frame_flags)[t] = 1;
  }
  return out;
}

void CollectTongueSamples(const Tensor &pellets, std::vector<double> *xs,
                          std::vector<double> *ys) {
  if (pellets.Cols() != kNumPelletDims)
    throw DataError("CollectTongueSamples: expected 16 pellet columns");
  for (int t = 0; t < pellets.Rows(); ++t) {
    for (int p = 0; p < 4; ++p) {
      xs->push_back(pellets.At(t, kT1X + 2 * p));
      ys->push_back(pellets.At(t, kT1Y + 2 * p));
    }
  }
}

}  // namespace artic
