// data/alignment.h

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

#ifndef ARTIC_DATA_ALIGNMENT_H_
#define ARTIC_DATA_ALIGNMENT_H_

#include <string>
#include <vector>

namespace artic {

struct PhoneSegment {
  double start_s = 0.0;
  double end_s = 0.0;
  std::string phone;
};

using PhoneAlignment = std::vector<PhoneSegment>;

// Text format: one segment per line, `<start-s> <end-s> <phone>`; `#`
// comments.  Segments must be ordered, non-overlapping, with start < end.
PhoneAlignment ReadAlignment(const std::string &path);
void WriteAlignment(const std::string &path, const PhoneAlignment &ali);

// Frame-midpoint assignment: frame t is labeled by the phone whose
// [start, end) interval contains (t + 0.5) * frame_period_s, so a boundary
// sitting exactly on a midpoint assigns the later phone.  Frames whose
// midpoint lies beyond the last segment end are tolerated up to
// end_slack_s and truncated; any other uncovered midpoint raises
// DataError.  Returns possibly fewer than num_frames labels.
std::vector<std::string> FramePhones(const PhoneAlignment &ali,
                                     int num_frames, double frame_period_s,
                                     double end_slack_s = 0.05);

}  // namespace artic

#endif  // ARTIC_DATA_ALIGNMENT_H_
