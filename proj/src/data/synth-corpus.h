// data/synth-corpus.h

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

#ifndef ARTIC_DATA_SYNTH_CORPUS_H_
#define ARTIC_DATA_SYNTH_CORPUS_H_

#include <cstdint>
#include <string>

namespace artic {

// Synthetic corpus generator.  Each utterance is a random phone sequence;
// per-phone integer articulatory targets drive smoothed trajectories
// (coarticulation) with jitter that shares a common component across
// features (ground-truth articulation).  Per-speaker affine distortions
// produce the measured tracks; a fixed seeded two-layer tanh network maps
// articulation to 39-dim observation features, which then pass through a
// per-speaker mixing channel (speaker variability that per-dimension
// normalization cannot remove) before being written as feature files.
//
// Outputs under out_dir:
//   <spk>-<utt>.afea      observation features, 10 ms
//   <spk>-<utt>.ali       phone alignment, seconds
//   <spk>-<utt>.pt.aart   pellet track, 5 ms, 16 dims
//   <spk>-<utt>.vtv.aart  measured VTV track, 5 ms, 6 dims
//   lf-table.txt          expert prior table (designed targets + flags)
//   manifest-pt.txt       manifest with pellet tracks
//   manifest-vtv.txt      manifest with VTV tracks
struct SynthConfig {
  int num_speakers = 6;
  int num_utts = 40;  // per speaker
  int num_phones = 12;
  uint64_t seed = 1;
  double noise_sigma = 0.3;
  int segments_per_utt = 8;
  int min_dwell = 8;   // frames per content segment
  int max_dwell = 16;
  int sil_frames = 5;  // leading and trailing silence
  double jitter_sigma = 0.6;    // pre-smoothing jitter level
  double jitter_common = 0.5;   // jitter variance fraction shared by dims
  int coartic_span = 8;         // truth smoothing half-width (frames)
  double channel_strength = 0.3;  // per-speaker acoustic mixing strength
  int obs_dim = 39;
  int hidden_dim = 24;
  std::string out_dir;
};

struct SynthPaths {
  std::string manifest_pt;
  std::string manifest_vtv;
  std::string lf_table;
};

SynthPaths GenerateSynthCorpus(const SynthConfig &cfg);

}  // namespace artic

#endif  // ARTIC_DATA_SYNTH_CORPUS_H_
