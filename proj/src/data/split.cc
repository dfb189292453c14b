// data/split.cc

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

#include "data/split.h"

#include <cmath>
#include <sstream>

#include "base/error.h"
#include "base/io.h"
#include "base/rng.h"

namespace artic {

std::string SplitKindName(SplitKind kind) {
  switch (kind) {
    case SplitKind::kMatched: return "matched";
    case SplitKind::kMismatchedTestFemale: return "mismatched-test-female";
    case SplitKind::kMismatchedTestMale: return "mismatched-test-male";
  }
  return "matched";
}

SplitKind ParseSplitKind(const std::string &name) {
  if (name == "matched") return SplitKind::kMatched;
  if (name == "mismatched-test-female") return SplitKind::kMismatchedTestFemale;
  if (name == "mismatched-test-male") return SplitKind::kMismatchedTestMale;
  throw ConfigError("unknown split kind: " + name);
}

void SplitPlan::Save(const std::string &path) const {
  std::ostringstream os;
  os << "kind " << SplitKindName(kind) << '\n';
  auto emit = [&os](const char *name, const std::vector<std::string> &set) {
    os << name;
    for (const std::string &s : set) os << ' ' << s;
    os << '\n';
  };
  emit("train", train);
  emit("valid", valid);
  emit("test", test);
  WriteTextFile(path, os.str());
}

SplitPlan SplitPlan::Load(const std::string &path) {
  SplitPlan plan;
  for (const std::string &line : ReadLines(path)) {
    std::vector<std::string> tok = SplitWhitespace(line);
    if (tok.empty()) continue;
    std::vector<std::string> rest(tok.begin() + 1, tok.end());
    if (tok[0] == "kind" && rest.size() == 1)
      plan.kind = ParseSplitKind(rest[0]);
    else if (tok[0] == "train")
      plan.train = rest;
    else if (tok[0] == "valid")
      plan.valid = rest;
    else if (tok[0] == "test")
      plan.test = rest;
    else
      throw DataError("bad split plan line in " + path + ": " + line);
  }
  if (plan.train.empty() || plan.test.empty())
    throw DataError("split plan missing train or test speakers: " + path);
  return plan;
}

SplitPlan MakeSplit(const DatasetManifest &manifest, SplitKind kind,
                    uint64_t seed, int train_count, int valid_count,
                    int test_count) {
  SplitPlan plan;
  plan.kind = kind;
  std::vector<std::string> speakers = manifest.Speakers();
  Rng rng(MixSeed(seed, "split"));
  if (kind == SplitKind::kMatched) {
    if (train_count < 1 || valid_count < 0 || test_count < 1)
      throw ConfigError("matched split needs train/valid/test counts");
    if (train_count + valid_count + test_count >
        static_cast<int>(speakers.size()))
      throw ConfigError("split counts exceed available speakers (" +
                        std::to_string(speakers.size()) + ")");
    rng.Shuffle(speakers);
    plan.train.assign(speakers.begin(), speakers.begin() + train_count);
    plan.valid.assign(speakers.begin() + train_count,
                      speakers.begin() + train_count + valid_count);
    plan.test.assign(speakers.begin() + train_count + valid_count,
                     speakers.begin() + train_count + valid_count + test_count);
  } else {
    char test_gender = kind == SplitKind::kMismatchedTestFemale ? 'F' : 'M';
    std::vector<std::string> rest;
    for (const std::string &s : speakers) {
      if (manifest.GenderOf(s) == test_gender)
        plan.test.push_back(s);
      else
        rest.push_back(s);
    }
    if (plan.test.empty())
      throw ConfigError("no speakers of the test gender in the manifest");
    if (rest.size() < 2)
      throw ConfigError("too few speakers of the training gender");
    rng.Shuffle(rest);
    int n_valid = static_cast<int>(std::lround(0.2 * rest.size()));
    if (n_valid < 1) n_valid = 1;
    plan.valid.assign(rest.begin(), rest.begin() + n_valid);
    plan.train.assign(rest.begin() + n_valid, rest.end());
  }
  std::sort(plan.train.begin(), plan.train.end());
  std::sort(plan.valid.begin(), plan.valid.end());
  std::sort(plan.test.begin(), plan.test.end());
  return plan;
}

}  // namespace artic
