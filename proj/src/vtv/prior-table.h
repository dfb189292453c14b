// vtv/prior-table.h

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

#ifndef ARTIC_VTV_PRIOR_TABLE_H_
#define ARTIC_VTV_PRIOR_TABLE_H_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "core/tensor.h"

namespace artic {

// One articulatory prior vector per phone: 10 integer features ordered
// [LP, LA, TTCL, TTCD, TBCL, TBCD, VEL, GLO, consonant, silence].
constexpr int kNumPriorFeatures = 10;
extern const char *const kPriorFeatureNames[kNumPriorFeatures];

using PriorVector = std::array<int, kNumPriorFeatures>;

class PriorTable {
 public:
  // Provenance labels: "LF" (expert), "SF" (statistical over all speakers),
  // "SF1"/"SF2" (statistical over k speakers).
  std::string provenance;

  void Set(const std::string &phone, const PriorVector &v);
  bool Has(const std::string &phone) const;
  const PriorVector &Get(const std::string &phone) const;  // DataError if absent
  std::vector<std::string> Phones() const;                 // sorted
  int NumPhones() const { return static_cast<int>(rows_.size()); }
  bool operator==(const PriorTable &other) const;

  // Text format: one line per phone, `<phone> <10 integers>`; `#` starts a
  // comment.  A `# provenance:` comment round-trips the provenance label.
  void Save(const std::string &path) const;
  static PriorTable Load(const std::string &path);

 private:
  std::map<std::string, PriorVector> rows_;
};

// Statistical prior construction: per phone and per VTV dimension, the mean
// of all frames carrying that phone over the supplied per-speaker
// z-normalized VTV sequences, rounded to the nearest integer (ties away
// from zero).  The last 4 features (VEL, GLO, consonant, silence) are
// copied from the seed table.  Every phone of the seed table must occur in
// the data and vice versa.
PriorTable ComputeStatisticalPriors(
    const std::vector<const Tensor *> &z_vtv_sequences,
    const std::vector<const std::vector<std::string> *> &frame_phones,
    const PriorTable &seed, const std::string &provenance);

// Expands per-frame phone labels to an N x 10 prior matrix via the table.
Tensor PriorsForFrames(const std::vector<std::string> &frame_phones,
                       const PriorTable &table);

}  // namespace artic

#endif  // ARTIC_VTV_PRIOR_TABLE_H_
