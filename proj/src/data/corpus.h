// data/corpus.h

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

#ifndef ARTIC_DATA_CORPUS_H_
#define ARTIC_DATA_CORPUS_H_

#include <map>
#include <string>
#include <vector>

#include "core/tensor.h"
#include "data/manifest.h"
#include "feat/mfcc.h"
#include "feat/speaker-stats.h"
#include "vtv/prior-table.h"

namespace artic {

enum class TargetKind { kNone, kPellets, kVtv };

std::string TargetKindName(TargetKind kind);
TargetKind ParseTargetKind(const std::string &name);

// One utterance with all sequences on the shared 10 ms frame grid.
struct AlignedUtterance {
  std::string speaker;
  std::string utt_id;
  char gender = 'M';
  Tensor acoustics;                       // N x 39, z-normalized per speaker
  std::vector<std::string> frame_phones;  // N labels
  Tensor priors;                          // N x 10 when a table was given
  Tensor artic;                           // N x D target track, z-normalized
  bool has_artic = false;

  int NumFrames() const { return acoustics.Rows(); }
};

struct CorpusOptions {
  TargetKind target = TargetKind::kNone;
  const PriorTable *prior_table = nullptr;
  MfccConfig mfcc;
};

// Fully loaded corpus.  Acoustic features are z-normalized with stats over
// each speaker's own utterances; articulatory targets likewise after any
// pellet-to-VTV conversion.  Iteration order is the manifest order
// (speaker id, then utterance id).
struct Corpus {
  std::vector<AlignedUtterance> utts;
  std::map<std::string, SpeakerStats> acoustic_stats;
  std::map<std::string, SpeakerStats> artic_stats;
  std::map<std::string, char> gender;

  std::vector<int> UttsOf(const std::string &speaker) const;
  std::vector<int> UttsOfSpeakers(const std::vector<std::string> &speakers) const;
};

// Loads every manifest utterance.  Audio paths ending in ".wav" run the
// MFCC pipeline; anything else is read as an acoustic feature file.
// Articulatory tracks are resampled to the acoustic frame grid; pellet
// tracks are converted to VTVs when the target asks for VTVs, using a
// palate fitted to the speaker's pooled tongue samples.
Corpus LoadCorpus(const DatasetManifest &manifest, const CorpusOptions &opts);

}  // namespace artic

#endif  // ARTIC_DATA_CORPUS_H_
