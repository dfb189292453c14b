// data/split.h

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

#ifndef ARTIC_DATA_SPLIT_H_
#define ARTIC_DATA_SPLIT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "data/manifest.h"

namespace artic {

enum class SplitKind {
  kMatched,
  kMismatchedTestFemale,
  kMismatchedTestMale,
};

std::string SplitKindName(SplitKind kind);
SplitKind ParseSplitKind(const std::string &name);

struct SplitPlan {
  SplitKind kind = SplitKind::kMatched;
  std::vector<std::string> train, valid, test;  // speaker ids

  void Save(const std::string &path) const;
  static SplitPlan Load(const std::string &path);
};

// Matched: seeded shuffle of the speaker list, then the first train_count
// speakers train, the next valid_count validate, the next test_count test.
// Mismatched: the test gender goes to test whole; the other gender is
// shuffled and round(0.2 * n) of its speakers validate, the rest train
// (count arguments are ignored).
SplitPlan MakeSplit(const DatasetManifest &manifest, SplitKind kind,
                    uint64_t seed, int train_count = -1, int valid_count = -1,
                    int test_count = -1);

}  // namespace artic

#endif  // ARTIC_DATA_SPLIT_H_
