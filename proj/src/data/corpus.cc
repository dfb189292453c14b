// data/corpus.cc

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

#include "data/corpus.h"

#include <algorithm>

#include "base/error.h"
#include "data/alignment.h"
#include "feat/feature-file.h"
#include "feat/wav.h"
#include "vtv/palate.h"
#include "vtv/vtv-extract.h"

namespace artic {

namespace {

constexpr double kFramePeriodS = 0.010;

bool EndsWith(const std::string &s, const std::string &suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Tensor TruncateRows(const Tensor &t, int rows) {
  if (t.Rows() == rows) return t;
  Tensor out({rows, t.Cols()});
  std::copy(t.data.begin(),
            t.data.begin() + static_cast<int64_t>(rows) * t.Cols(),
            out.data.begin());
  return out;
}

}  // namespace

std::string TargetKindName(TargetKind kind) {
  switch (kind) {
    case TargetKind::kNone: return "none";
    case TargetKind::kPellets: return "pt";
    case TargetKind::kVtv: return "vtv";
  }
  return "none";
}

TargetKind ParseTargetKind(const std::string &name) {
  if (name == "none") return TargetKind::kNone;
  if (name == "pt") return TargetKind::kPellets;
  if (name == "vtv") return TargetKind::kVtv;
  throw ConfigError("unknown target kind: " + name);
}

std::vector<int> Corpus::UttsOf(const std::string &speaker) const {
  std::vector<int> out;
  for (size_t i = 0; i < utts.size(); ++i)
    if (utts[i].speaker == speaker) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> Corpus::UttsOfSpeakers(
    const std::vector<std::string> &speakers) const {
  std::vector<int> out;
  for (size_t i = 0; i < utts.size(); ++i)
    if (std::find(speakers.begin(), speakers.end(), utts[i].speaker) !=
        speakers.end())
      out.push_back(static_cast<int>(i));
  return out;
}

Corpus LoadCorpus(const DatasetManifest &manifest, const CorpusOptions &opts) {
  Corpus corpus;
  // Raw per-utterance loads; normalization and conversion follow per
  // speaker once everything is in memory.
  struct RawArtic {
    Tensor frames;    // resampled to the acoustic grid
    TrackKind kind = TrackKind::kVtv;
    bool present = false;
  };
  std::vector<RawArtic> raw_artic(manifest.entries.size());

  for (const UtteranceEntry &e : manifest.entries) {
    AlignedUtterance u;
    u.speaker = e.speaker;
    u.utt_id = e.utt_id;
    u.gender = e.gender;
    if (EndsWith(e.audio_path, ".wav")) {
      WavData wav = ReadWav(e.audio_path);
      Tensor mfcc = ComputeMfcc(wav.samples, wav.sample_rate, opts.mfcc);
      u.acoustics = AppendDeltas(mfcc, opts.mfcc.delta_window);
    } else {
      u.acoustics = ReadFeatureFile(e.audio_path).frames;
    }
    PhoneAlignment ali = ReadAlignment(e.align_path);
    u.frame_phones = FramePhones(ali, u.acoustics.Rows(), kFramePeriodS);
    if (static_cast<int>(u.frame_phones.size()) < u.acoustics.Rows())
      u.acoustics =
          TruncateRows(u.acoustics, static_cast<int>(u.frame_phones.size()));

    if (opts.target != TargetKind::kNone && !e.artic_path.empty()) {
      TrackFile track = ReadTrackFile(e.artic_path);
      RawArtic &ra = raw_artic[corpus.utts.size()];
      ra.kind = track.kind;
      if (opts.target == TargetKind::kPellets &&
          track.kind != TrackKind::kPellets)
        throw DataError("utterance " + e.utt_id +
                        ": pellet target requested but track is not pellets");
      if (opts.target == TargetKind::kVtv && track.kind == TrackKind::kPriors)
        throw DataError("utterance " + e.utt_id +
                        ": cannot derive VTVs from a prior-feature track");
      ra.frames = ResampleTrack(track.frames, track.frame_period_us,
                                kDefaultFramePeriodUs, u.NumFrames());
      ra.present = true;
    }
    corpus.gender[u.speaker] = u.gender;
    corpus.utts.push_back(std::move(u));
  }

  for (const std::string &speaker : manifest.Speakers()) {
    std::vector<int> idx = corpus.UttsOf(speaker);

    std::vector<const Tensor *> acoustic_seqs;
    for (int i : idx) acoustic_seqs.push_back(&corpus.utts[i].acoustics);
    SpeakerStats astats = FitSpeakerStats(speaker, acoustic_seqs);
    for (int i : idx)
      corpus.utts[i].acoustics = ZNormalize(corpus.utts[i].acoustics, astats);
    corpus.acoustic_stats[speaker] = std::move(astats);

    if (opts.target == TargetKind::kNone) continue;

    // Pellet-to-VTV conversion with a per-speaker palate when needed.
    bool needs_palate = false;
    for (int i : idx)
      if (raw_artic[i].present && opts.target == TargetKind::kVtv &&
          raw_artic[i].kind == TrackKind::kPellets)
        needs_palate = true;
    if (needs_palate) {
      std::vector<double> xs, ys, ulx;
      for (int i : idx) {
        if (!raw_artic[i].present ||
            raw_artic[i].kind != TrackKind::kPellets)
          continue;
        CollectTongueSamples(raw_artic[i].frames, &xs, &ys);
        for (int t = 0; t < raw_artic[i].frames.Rows(); ++t)
          ulx.push_back(raw_artic[i].frames.At(t, kUlX));
      }
      PalateModel palate = FitPalate(xs, ys);
      double lip_origin = 0.0;
      for (double v : ulx) lip_origin += v;
      lip_origin /= static_cast<double>(ulx.size());
      for (int i : idx) {
        if (!raw_artic[i].present ||
            raw_artic[i].kind != TrackKind::kPellets)
          continue;
        raw_artic[i].frames =
            PelletsToVtvs(raw_artic[i].frames, palate, lip_origin);
        raw_artic[i].kind = TrackKind::kVtv;
      }
    }

    std::vector<const Tensor *> artic_seqs;
    for (int i : idx)
      if (raw_artic[i].present) artic_seqs.push_back(&raw_artic[i].frames);
    if (artic_seqs.empty()) continue;
    SpeakerStats tstats = FitSpeakerStats(speaker, artic_seqs);
    for (int i : idx) {
      if (!raw_artic[i].present) continue;
      corpus.utts[i].artic = ZNormalize(raw_artic[i].frames, tstats);
      corpus.utts[i].has_artic = true;
    }
    corpus.artic_stats[speaker] = std::move(tstats);
  }

  if (opts.prior_table != nullptr)
    for (AlignedUtterance &u : corpus.utts)
      u.priors = PriorsForFrames(u.frame_phones, *opts.prior_table);

  return corpus;
}

}  // namespace artic
