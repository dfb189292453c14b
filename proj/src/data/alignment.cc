// data/alignment.cc

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

#include "data/alignment.h"

#include <cstdio>
#include <sstream>

#include "base/error.h"
#include "base/io.h"

namespace artic {

PhoneAlignment ReadAlignment(const std::string &path) {
  PhoneAlignment ali;
  std::vector<std::string> lines = ReadLines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string line = lines[i];
    std::string location = path + ":" + std::to_string(i + 1);
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;
    std::vector<std::string> tok = SplitWhitespace(line);
    if (tok.size() != 3)
      throw DataError("alignment line needs `start end phone` (" + location + ")");
    PhoneSegment seg;
    if (!ParseDouble(tok[0], &seg.start_s) || !ParseDouble(tok[1], &seg.end_s))
      throw DataError("bad alignment times (" + location + ")");
    seg.phone = tok[2];
    if (seg.start_s >= seg.end_s)
      throw DataError("alignment segment start >= end (" + location + ")");
    if (!ali.empty() && seg.start_s < ali.back().end_s - 1e-9)
      throw DataError("alignment segments overlap or are unordered (" +
                      location + ")");
    ali.push_back(seg);
  }
  if (ali.empty()) throw DataError("alignment is empty: " + path);
  return ali;
}

void WriteAlignment(const std::string &path, const PhoneAlignment &ali) {
  std::ostringstream os;
  char buf[64];
  for (const PhoneSegment &seg : ali) {
    std::snprintf(buf, sizeof(buf), "%.4f %.4f ", seg.start_s, seg.end_s);
    os << buf << seg.phone << '\n';
  }
  WriteTextFile(path, os.str());
}

std::vector<std::string> FramePhones(const PhoneAlignment &ali,
                                     int num_frames, double frame_period_s,
                                     double end_slack_s) {
  const double end = ali.back().end_s;
  const double last_mid = (num_frames - 0.5) * frame_period_s;
  if (last_mid - end > end_slack_s)
    throw DataError("alignment ends " + std::to_string(last_mid - end) +
                    " s before the audio (slack is " +
                    std::to_string(end_slack_s) + " s)");
  std::vector<std::string> out;
  out.reserve(num_frames);
  size_t seg = 0;
  for (int t = 0; t < num_frames; ++t) {
    double mid = (t + 0.5) * frame_period_s;
    while (seg < ali.size() && mid >= ali[seg].end_s) ++seg;
    if (seg >= ali.size()) break;  // truncate trailing frames within slack
    if (mid < ali[seg].start_s)
      throw DataError("unlabeled frame span at " + std::to_string(mid) + " s");
    out.push_back(ali[seg].phone);
  }
  return out;
}

}  // namespace artic
