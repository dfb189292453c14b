// eval/score-report.h

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

#ifndef ARTIC_EVAL_SCORE_REPORT_H_
#define ARTIC_EVAL_SCORE_REPORT_H_

#include <string>
#include <vector>

#include "core/tensor.h"

namespace artic {

// One feature's scores.  Either metric may be absent: RMSE is omitted for
// expert prior provenance (integers on no physical scale), r is undefined
// for constant series and reported through undefined_r instead.
struct FeatureScore {
  std::string name;
  double rmse = 0.0;
  double r = 0.0;
  bool has_rmse = false;
  bool has_r = false;
  int undefined_r = 0;  // speaker series excluded for zero variance
};

struct SpeakerScore {
  std::string speaker;
  int num_frames = 0;
  std::vector<FeatureScore> features;
};

// Prediction/measurement pair for one utterance, both on the same frame
// grid and z-normalized with the same per-speaker stats.
struct ScoredSequence {
  std::string speaker;
  Tensor pred;  // T x D
  Tensor meas;  // T x D
};

// Scores per §-style protocol: frames are pooled within each speaker,
// per-feature metrics computed per speaker, then averaged over speakers
// (the headline numbers).  Globally pooled metrics are kept alongside.
// Feature-averaged numbers are arithmetic means over features with a
// defined value.
struct ScoreReport {
  // Metadata echoed into the report header.
  std::string model, split, priors;
  std::vector<std::string> notes;

  std::vector<std::string> feature_names;
  std::vector<FeatureScore> headline;  // per-speaker mean, one per feature
  std::vector<FeatureScore> pooled;    // all frames pooled, one per feature
  std::vector<SpeakerScore> speakers;

  double avg_rmse = 0.0, avg_r = 0.0;  // means over headline features
  bool has_avg_rmse = false, has_avg_r = false;
  double pooled_avg_rmse = 0.0, pooled_avg_r = 0.0;
  bool has_pooled_avg_rmse = false, has_pooled_avg_r = false;
  int undefined_r_total = 0;

  void Save(const std::string &path) const;
  std::string ToTsv() const;
};

// with_rmse=false drops RMSE from every row (prior vectors without a
// physical scale).  Sequences of one speaker are pooled in input order.
ScoreReport ScoreSequences(const std::vector<ScoredSequence> &seqs,
                           const std::vector<std::string> &feature_names,
                           bool with_rmse);

}  // namespace artic

#endif  // ARTIC_EVAL_SCORE_REPORT_H_
