// feat/feature-file.cc

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

#include "feat/feature-file.h"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "base/error.h"
#include "base/io.h"

namespace artic {

namespace {

constexpr uint32_t kFormatVersion = 1;

void CheckMagic(std::istream &is, const char *magic, const std::string &path) {
  char buf[4];
  is.read(buf, 4);
  if (!is || std::string(buf, 4) != magic)
    throw DataError("bad magic in " + path + " (expected " + magic + ")");
}

void WriteHeader(std::ostream &os, const char *magic, const Tensor &frames,
                 int frame_period_us) {
  os.write(magic, 4);
  WriteU32(os, kFormatVersion);
  WriteU32(os, static_cast<uint32_t>(frames.Cols()));
  WriteU32(os, static_cast<uint32_t>(frame_period_us));
  WriteU32(os, static_cast<uint32_t>(frames.Rows()));
}

struct Header {
  int dims, frame_period_us, frame_count;
};

Header ReadHeader(std::istream &is, const char *magic, const std::string &path) {
  CheckMagic(is, magic, path);
  uint32_t version = ReadU32(is);
  if (version != kFormatVersion)
    throw DataError("unsupported format version in " + path);
  Header h;
  h.dims = static_cast<int>(ReadU32(is));
  h.frame_period_us = static_cast<int>(ReadU32(is));
  h.frame_count = static_cast<int>(ReadU32(is));
  if (h.dims <= 0 || h.frame_period_us <= 0 || h.frame_count < 0)
    throw DataError("invalid header in " + path);
  return h;
}

Tensor ReadPayloadF32(std::istream &is, int rows, int cols,
                      const std::string &path) {
  Tensor t({rows, cols});
  for (int64_t i = 0; i < t.NumEl(); ++i) t.data[i] = ReadF32(is);
  if (!is) throw DataError("truncated payload in " + path);
  return t;
}

void WritePayloadF32(std::ostream &os, const Tensor &frames) {
  for (double v : frames.data) WriteF32(os, static_cast<float>(v));
}

}  // namespace

void WriteFeatureFile(const std::string &path, const Tensor &frames,
                      int frame_period_us) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataError("cannot write feature file: " + path);
  WriteHeader(os, "AFEA", frames, frame_period_us);
  WritePayloadF32(os, frames);
  if (!os) throw DataError("short write to feature file: " + path);
}

FeatureFile ReadFeatureFile(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DataError("cannot open feature file: " + path);
  Header h = ReadHeader(is, "AFEA", path);
  FeatureFile f;
  f.frame_period_us = h.frame_period_us;
  f.frames = ReadPayloadF32(is, h.frame_count, h.dims, path);
  return f;
}

void WriteTrackFile(const std::string &path, const Tensor &frames,
                    TrackKind kind, int frame_period_us) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataError("cannot write track file: " + path);
  WriteHeader(os, "AART", frames, frame_period_us);
  WriteU8(os, static_cast<uint8_t>(kind));
  WritePayloadF32(os, frames);
  if (!os) throw DataError("short write to track file: " + path);
}

TrackFile ReadTrackFile(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DataError("cannot open track file: " + path);
  Header h = ReadHeader(is, "AART", path);
  TrackFile t;
  t.frame_period_us = h.frame_period_us;
  uint8_t kind = ReadU8(is);
  if (kind > 2) throw DataError("unknown track kind in " + path);
  t.kind = static_cast<TrackKind>(kind);
  t.frames = ReadPayloadF32(is, h.frame_count, h.dims, path);
  return t;
}

Tensor ResampleTrack(const Tensor &frames, int from_period_us,
                     int to_period_us, int out_frames) {
  if (frames.Rows() == 0) throw DataError("ResampleTrack: empty track");
  const int n = frames.Rows(), d = frames.Cols();
  Tensor out({out_frames, d});
  for (int i = 0; i < out_frames; ++i) {
    double src = static_cast<double>(i) * to_period_us / from_period_us;
    if (src <= 0.0) src = 0.0;
    if (src >= n - 1) src = n - 1;
    int lo = static_cast<int>(std::floor(src));
    int hi = std::min(lo + 1, n - 1);
    double w = src - lo;
    for (int j = 0; j < d; ++j)
      out.At(i, j) = (1.0 - w) * frames.At(lo, j) + w * frames.At(hi, j);
  }
  return out;
}

}  // namespace artic
