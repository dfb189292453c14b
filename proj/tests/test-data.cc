// tests/test-data.cc

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

#include "base/error.h"
#include "base/io.h"
#include "data/alignment.h"
#include "data/corpus.h"
#include "data/manifest.h"
#include "data/split.h"
#include "data/synth-corpus.h"
#include "doctest.h"
#include "feat/feature-file.h"
#include "feat/speaker-stats.h"
#include "vtv/prior-table.h"
#include "vtv/vtv-extract.h"

using namespace artic;

namespace {

std::string TempDir(const std::string &name) {
  std::string dir = (std::filesystem::temp_directory_path() / name).string();
  std::filesystem::remove_all(dir);
  MakeDirs(dir);
  return dir;
}

// Builds a minimal on-disk corpus: two speakers, one utterance each,
// feature files plus alignments.
struct TinyCorpus {
  std::string dir, manifest_path;
  TinyCorpus() {
    dir = TempDir("artic-tiny-corpus");
    for (int s = 0; s < 2; ++s) {
      std::string spk = s == 0 ? "A" : "B";
      Tensor feats({20, 3});
      for (int t = 0; t < 20; ++t)
        for (int j = 0; j < 3; ++j) feats.At(t, j) = 0.1 * t + j + s;
      WriteFeatureFile(dir + "/" + spk + ".afea", feats);
      PhoneAlignment ali = {{0.0, 0.1, "aa"}, {0.1, 0.2, "bb"}};
      WriteAlignment(dir + "/" + spk + ".ali", ali);
      Tensor track({20, 6});
      for (int t = 0; t < 20; ++t)
        for (int j = 0; j < 6; ++j) track.At(t, j) = std::sin(0.3 * t + j);
      WriteTrackFile(dir + "/" + spk + ".vtv.aart", track, TrackKind::kVtv);
    }
    manifest_path = dir + "/manifest.txt";
    WriteTextFile(manifest_path,
                  "A M u0 A.afea A.ali A.vtv.aart\n"
                  "B F u0 B.afea B.ali B.vtv.aart\n");
  }
};

}  // namespace

TEST_CASE("alignment round-trips and validates") {
  std::string dir = TempDir("artic-ali");
  PhoneAlignment ali = {{0.0, 0.25, "sil"}, {0.25, 0.8, "aa"}};
  WriteAlignment(dir + "/a.ali", ali);
  PhoneAlignment back = ReadAlignment(dir + "/a.ali");
  REQUIRE(back.size() == 2);
  CHECK(back[0].phone == "sil");
  CHECK(back[1].start_s == doctest::Approx(0.25));
}

TEST_CASE("overlapping alignment segments are an error") {
  std::string dir = TempDir("artic-ali-bad");
  WriteTextFile(dir + "/a.ali", "0.0 0.5 aa\n0.4 0.9 bb\n");
  CHECK_THROWS_AS(ReadAlignment(dir + "/a.ali"), DataError);
}

TEST_CASE("frame phones follow the midpoint rule") {
  PhoneAlignment ali = {{0.0, 0.025, "aa"}, {0.025, 0.06, "bb"}};
  // Midpoints: 5 ms -> aa, 15 ms -> aa, 25 ms -> bb (boundary at the
  // midpoint goes to the later phone), 35/45/55 ms -> bb.
  std::vector<std::string> phones = FramePhones(ali, 6, 0.010);
  REQUIRE(phones.size() == 6);
  CHECK(phones[0] == "aa");
  CHECK(phones[1] == "aa");
  CHECK(phones[2] == "bb");
  CHECK(phones[5] == "bb");
}

TEST_CASE("frames beyond the alignment are truncated within slack") {
  PhoneAlignment ali = {{0.0, 0.10, "aa"}};
  std::vector<std::string> phones = FramePhones(ali, 14, 0.010);
  CHECK(phones.size() == 10);  // midpoints 105..135 ms dropped
  CHECK_THROWS_AS(FramePhones(ali, 30, 0.010), DataError);
}

TEST_CASE("gaps inside the alignment are an error") {
  PhoneAlignment ali = {{0.0, 0.02, "aa"}, {0.08, 0.2, "bb"}};
  CHECK_THROWS_AS(FramePhones(ali, 10, 0.010), DataError);
}

TEST_CASE("manifest loads, sorts, and validates files") {
  TinyCorpus tc;
  DatasetManifest m = LoadManifest(tc.manifest_path);
  REQUIRE(m.entries.size() == 2);
  CHECK(m.entries[0].speaker == "A");
  CHECK(m.entries[1].speaker == "B");
  CHECK(m.GenderOf("B") == 'F');
  CHECK(m.Speakers() == std::vector<std::string>{"A", "B"});
}

TEST_CASE("manifest with a missing file is an error") {
  TinyCorpus tc;
  WriteTextFile(tc.dir + "/bad.txt", "A M u0 nope.afea A.ali\n");
  CHECK_THROWS_AS(LoadManifest(tc.dir + "/bad.txt"), DataError);
}

TEST_CASE("duplicate utterance ids are an error") {
  TinyCorpus tc;
  WriteTextFile(tc.dir + "/dup.txt",
                "A M u0 A.afea A.ali\nA M u0 A.afea A.ali\n");
  CHECK_THROWS_AS(LoadManifest(tc.dir + "/dup.txt"), DataError);
}

TEST_CASE("exclusion list removes utterances") {
  TinyCorpus tc;
  WriteTextFile(tc.dir + "/exclude.txt", "A u0\n");
  DatasetManifest m = LoadManifest(tc.manifest_path, tc.dir + "/exclude.txt");
  REQUIRE(m.entries.size() == 1);
  CHECK(m.entries[0].speaker == "B");
}

TEST_CASE("manifest round-trips") {
  TinyCorpus tc;
  DatasetManifest m = LoadManifest(tc.manifest_path);
  SaveManifest(tc.dir + "/copy.txt", m);
  DatasetManifest back = LoadManifest(tc.dir + "/copy.txt");
  REQUIRE(back.entries.size() == m.entries.size());
  for (size_t i = 0; i < m.entries.size(); ++i) {
    CHECK(back.entries[i].speaker == m.entries[i].speaker);
    CHECK(back.entries[i].audio_path == m.entries[i].audio_path);
  }
}

TEST_CASE("matched split honors counts and is seed-stable") {
  SynthConfig cfg;
  cfg.num_speakers = 6;
  cfg.num_utts = 2;
  cfg.num_phones = 4;
  cfg.segments_per_utt = 3;
  cfg.out_dir = TempDir("artic-split-corpus");
  SynthPaths paths = GenerateSynthCorpus(cfg);
  DatasetManifest m = LoadManifest(paths.manifest_vtv);

  SplitPlan p1 = MakeSplit(m, SplitKind::kMatched, 7, 4, 1, 1);
  SplitPlan p2 = MakeSplit(m, SplitKind::kMatched, 7, 4, 1, 1);
  CHECK(p1.train.size() == 4);
  CHECK(p1.valid.size() == 1);
  CHECK(p1.test.size() == 1);
  CHECK(p1.train == p2.train);
  CHECK(p1.test == p2.test);

  std::set<std::string> all;
  for (const auto &s : p1.train) all.insert(s);
  for (const auto &s : p1.valid) all.insert(s);
  for (const auto &s : p1.test) all.insert(s);
  CHECK(all.size() == 6);  // pairwise disjoint

  CHECK_THROWS_AS(MakeSplit(m, SplitKind::kMatched, 7, 5, 1, 1), ConfigError);
}

TEST_CASE("mismatched split puts one gender in test") {
  SynthConfig cfg;
  cfg.num_speakers = 6;
  cfg.num_utts = 2;
  cfg.num_phones = 4;
  cfg.segments_per_utt = 3;
  cfg.out_dir = TempDir("artic-split-corpus2");
  SynthPaths paths = GenerateSynthCorpus(cfg);
  DatasetManifest m = LoadManifest(paths.manifest_vtv);

  SplitPlan p = MakeSplit(m, SplitKind::kMismatchedTestFemale, 3);
  for (const auto &s : p.test) CHECK(m.GenderOf(s) == 'F');
  for (const auto &s : p.train) CHECK(m.GenderOf(s) == 'M');
  for (const auto &s : p.valid) CHECK(m.GenderOf(s) == 'M');
  CHECK(p.test.size() == 3);
  CHECK(p.train.size() + p.valid.size() == 3);
  CHECK(p.valid.size() == 1);  // round(0.2 * 3)
}

TEST_CASE("split plans round-trip through files") {
  SplitPlan p;
  p.kind = SplitKind::kMismatchedTestMale;
  p.train = {"S01", "S03"};
  p.valid = {"S05"};
  p.test = {"S00", "S02"};
  std::string dir = TempDir("artic-splitfile");
  p.Save(dir + "/plan.txt");
  SplitPlan back = SplitPlan::Load(dir + "/plan.txt");
  CHECK(back.kind == p.kind);
  CHECK(back.train == p.train);
  CHECK(back.valid == p.valid);
  CHECK(back.test == p.test);
}

TEST_CASE("corpus loads with normalized features and priors") {
  TinyCorpus tc;
  DatasetManifest m = LoadManifest(tc.manifest_path);
  PriorTable table;
  table.Set("aa", {1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  table.Set("bb", {0, 1, 0, 0, 0, 0, 0, 0, 0, 0});
  CorpusOptions opts;
  opts.target = TargetKind::kVtv;
  opts.prior_table = &table;
  Corpus corpus = LoadCorpus(m, opts);
  REQUIRE(corpus.utts.size() == 2);
  const AlignedUtterance &u = corpus.utts[0];
  CHECK(u.NumFrames() == 20);
  CHECK(u.priors.Rows() == 20);
  CHECK(u.has_artic);
  CHECK(u.artic.Rows() == 20);
  CHECK(u.frame_phones.front() == "aa");
  // Acoustics are z-normalized per speaker.
  SpeakerStats st = FitSpeakerStats("A", {&corpus.utts[0].acoustics});
  for (int j = 0; j < 3; ++j) {
    CHECK(std::fabs(st.mean[j]) < 1e-9);
    CHECK(std::fabs(st.stddev[j] - 1.0) < 1e-9);
  }
  // Priors follow the frame phones.
  CHECK(u.priors.At(0, 0) == 1.0);
  CHECK(u.priors.At(19, 1) == 1.0);
}

TEST_CASE("corpus loading is idempotent") {
  TinyCorpus tc;
  DatasetManifest m = LoadManifest(tc.manifest_path);
  CorpusOptions opts;
  opts.target = TargetKind::kVtv;
  Corpus a = LoadCorpus(m, opts);
  Corpus b = LoadCorpus(m, opts);
  REQUIRE(a.utts.size() == b.utts.size());
  for (size_t i = 0; i < a.utts.size(); ++i) {
    CHECK(a.utts[i].acoustics.data == b.utts[i].acoustics.data);
    CHECK(a.utts[i].artic.data == b.utts[i].artic.data);
  }
}

TEST_CASE("synthetic corpus is bit-identical for the same seed") {
  SynthConfig cfg;
  cfg.num_speakers = 2;
  cfg.num_utts = 2;
  cfg.num_phones = 4;
  cfg.segments_per_utt = 4;
  std::string dir_a = TempDir("artic-synth-a");
  std::string dir_b = TempDir("artic-synth-b");
  cfg.out_dir = dir_a;
  GenerateSynthCorpus(cfg);
  cfg.out_dir = dir_b;
  GenerateSynthCorpus(cfg);

  int compared = 0;
  for (const auto &entry : std::filesystem::directory_iterator(dir_b)) {
    std::string name = entry.path().filename().string();
    std::ifstream fa(dir_a + "/" + name, std::ios::binary);
    std::ifstream fb(entry.path(), std::ios::binary);
    REQUIRE(fa.good());
    std::string ca((std::istreambuf_iterator<char>(fa)),
                   std::istreambuf_iterator<char>());
    std::string cb((std::istreambuf_iterator<char>(fb)),
                   std::istreambuf_iterator<char>());
    CHECK(ca == cb);
    ++compared;
  }
  CHECK(compared > 10);
}

TEST_CASE("synthetic corpus statistics recover the designed targets") {
  SynthConfig cfg;
  cfg.num_speakers = 2;
  cfg.num_utts = 24;
  cfg.num_phones = 6;
  cfg.out_dir = TempDir("artic-synth-stats");
  SynthPaths paths = GenerateSynthCorpus(cfg);
  PriorTable lf = PriorTable::Load(paths.lf_table);
  DatasetManifest m = LoadManifest(paths.manifest_vtv);
  CorpusOptions opts;
  opts.target = TargetKind::kVtv;
  Corpus corpus = LoadCorpus(m, opts);

  std::vector<const Tensor *> seqs;
  std::vector<const std::vector<std::string> *> phones;
  for (const auto &u : corpus.utts) {
    seqs.push_back(&u.artic);
    phones.push_back(&u.frame_phones);
  }
  PriorTable sf = ComputeStatisticalPriors(seqs, phones, lf, "SF");
  for (const std::string &ph : lf.Phones())
    for (int j = 0; j < kNumVtvs; ++j)
      CHECK(sf.Get(ph)[j] == lf.Get(ph)[j]);
}
