// tests/test-feat.cc

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

#include "base/error.h"
#include "base/rng.h"
#include "doctest.h"
#include "feat/feature-file.h"
#include "feat/mfcc.h"
#include "feat/speaker-stats.h"
#include "feat/spectrum.h"
#include "feat/wav.h"

using namespace artic;

namespace {

std::string TempPath(const std::string &name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::vector<double> WhiteNoise(int n, uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(n);
  for (double &x : v) x = 0.3 * rng.Gaussian();
  return v;
}

}  // namespace

TEST_CASE("one second of 16 kHz audio yields 98 frames") {
  std::vector<double> audio(16000, 0.0);
  audio[0] = 1.0;  // avoid all-silence shortcut mattering
  Tensor mfcc = ComputeMfcc(audio, 16000);
  CHECK(mfcc.Rows() == 98);
  CHECK(mfcc.Cols() == 13);
}

TEST_CASE("frame count formula holds for random lengths") {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    int samples = 400 + rng.UniformInt(32000);
    std::vector<double> audio(samples, 0.01);
    Tensor mfcc = ComputeMfcc(audio, 16000);
    CHECK(mfcc.Rows() == (samples - 400) / 160 + 1);
  }
}

TEST_CASE("audio shorter than a window is an error") {
  std::vector<double> audio(399, 0.0);
  CHECK_THROWS_AS(ComputeMfcc(audio, 16000), DataError);
}

TEST_CASE("digital silence gives identical frames") {
  std::vector<double> audio(8000, 0.0);
  Tensor mfcc = ComputeMfcc(audio, 16000);
  for (int t = 1; t < mfcc.Rows(); ++t)
    for (int c = 0; c < mfcc.Cols(); ++c)
      CHECK(mfcc.At(t, c) == mfcc.At(0, c));
}

TEST_CASE("doubling the signal shifts c0 and leaves c1..c12 alone") {
  std::vector<double> audio = WhiteNoise(8000, 11);
  std::vector<double> doubled = audio;
  for (double &v : doubled) v *= 2.0;
  Tensor a = ComputeMfcc(audio, 16000);
  Tensor b = ComputeMfcc(doubled, 16000);
  double shift = b.At(0, 0) - a.At(0, 0);
  CHECK(shift > 0.0);
  for (int t = 0; t < a.Rows(); ++t) {
    CHECK(b.At(t, 0) - a.At(t, 0) == doctest::Approx(shift).epsilon(1e-6));
    for (int c = 1; c < 13; ++c)
      CHECK(b.At(t, c) == doctest::Approx(a.At(t, c)).epsilon(1e-6));
  }
}

TEST_CASE("dct basis is orthonormal") {
  Tensor d = DctMatrix(13, 26);
  for (int i = 0; i < 13; ++i)
    for (int j = 0; j < 13; ++j) {
      double dot = 0.0;
      for (int k = 0; k < 26; ++k) dot += d.At(i, k) * d.At(j, k);
      CHECK(std::fabs(dot - (i == j ? 1.0 : 0.0)) < 1e-10);
    }
}

TEST_CASE("mel filters are positive and cover the band") {
  Tensor fb = MelFilterbank(26, 512, 16000.0, 0.0, 8000.0);
  std::vector<double> coverage(fb.Cols(), 0.0);
  for (int m = 0; m < fb.Rows(); ++m) {
    double sum = 0.0;
    for (int k = 0; k < fb.Cols(); ++k) {
      CHECK(fb.At(m, k) >= 0.0);
      sum += fb.At(m, k);
      coverage[k] += fb.At(m, k);
    }
    CHECK(sum > 0.0);
  }
  // Interior bins are covered by at least one filter.
  for (int k = 2; k < fb.Cols() - 1; ++k) CHECK(coverage[k] > 0.0);
}

TEST_CASE("fft matches a direct dft on a small case") {
  Rng rng(9);
  const int n = 64;
  std::vector<double> re(n), im(n, 0.0);
  for (double &v : re) v = rng.Uniform(-1, 1);
  std::vector<double> dft_re(n, 0.0), dft_im(n, 0.0);
  for (int k = 0; k < n; ++k)
    for (int t = 0; t < n; ++t) {
      double ang = -2.0 * 3.14159265358979323846 * k * t / n;
      dft_re[k] += re[t] * std::cos(ang);
      dft_im[k] += re[t] * std::sin(ang);
    }
  Fft(&re, &im);
  for (int k = 0; k < n; ++k) {
    CHECK(re[k] == doctest::Approx(dft_re[k]).epsilon(1e-9));
    CHECK(im[k] == doctest::Approx(dft_im[k]).epsilon(1e-9));
  }
}

TEST_CASE("constant features have zero deltas") {
  Tensor feats({5, 3});
  feats.Fill(2.5);
  Tensor out = AppendDeltas(feats);
  REQUIRE(out.Cols() == 9);
  for (int t = 0; t < 5; ++t)
    for (int c = 3; c < 9; ++c) CHECK(out.At(t, c) == 0.0);
}

TEST_CASE("linear ramp has interior delta equal to the slope") {
  const double slope = 0.7;
  Tensor feats({9, 1});
  for (int t = 0; t < 9; ++t) feats.At(t, 0) = slope * t;
  Tensor out = AppendDeltas(feats);
  for (int t = 2; t < 7; ++t)
    CHECK(out.At(t, 1) == doctest::Approx(slope).epsilon(1e-12));
}

TEST_CASE("single frame has zero deltas") {
  Tensor feats({1, 2});
  feats.At(0, 0) = 1.0;
  feats.At(0, 1) = -3.0;
  Tensor out = AppendDeltas(feats);
  CHECK(out.At(0, 2) == 0.0);
  CHECK(out.At(0, 3) == 0.0);
  CHECK(out.At(0, 4) == 0.0);
  CHECK(out.At(0, 5) == 0.0);
}

TEST_CASE("speaker stats on {0,2} give mean 1 std 1") {
  Tensor seq = Tensor::Matrix(2, 1, {0.0, 2.0});
  SpeakerStats st = FitSpeakerStats("spk", {&seq});
  CHECK(st.mean[0] == 1.0);
  CHECK(st.stddev[0] == 1.0);
}

TEST_CASE("constant frames clamp std to the floor") {
  Tensor seq({10, 2});
  seq.Fill(4.0);
  SpeakerStats st = FitSpeakerStats("spk", {&seq});
  CHECK(st.mean[0] == 4.0);
  CHECK(st.stddev[0] == SpeakerStats::kStdFloor);
  CHECK(st.stddev[1] == SpeakerStats::kStdFloor);
}

TEST_CASE("normalize then denormalize is the identity") {
  Rng rng(17);
  Tensor seq({50, 4});
  for (double &v : seq.data) v = rng.Uniform(-5, 5);
  SpeakerStats st = FitSpeakerStats("spk", {&seq});
  Tensor back = Denormalize(ZNormalize(seq, st), st);
  for (int64_t i = 0; i < seq.NumEl(); ++i)
    CHECK(back.data[i] == doctest::Approx(seq.data[i]).epsilon(1e-12));
}

TEST_CASE("normalized data refits to zero mean unit std") {
  Rng rng(23);
  Tensor seq({400, 3});
  for (double &v : seq.data) v = 2.0 + 3.0 * rng.Gaussian();
  SpeakerStats st = FitSpeakerStats("spk", {&seq});
  Tensor z = ZNormalize(seq, st);
  SpeakerStats st2 = FitSpeakerStats("spk", {&z});
  for (int j = 0; j < 3; ++j) {
    CHECK(std::fabs(st2.mean[j]) < 1e-10);
    CHECK(std::fabs(st2.stddev[j] - 1.0) < 1e-10);
  }
}

TEST_CASE("value at mean plus two sigma normalizes to 2") {
  Tensor seq = Tensor::Matrix(2, 1, {0.0, 2.0});  // mean 1, std 1
  SpeakerStats st = FitSpeakerStats("spk", {&seq});
  Tensor probe = Tensor::Matrix(1, 1, {st.mean[0] + 2.0 * st.stddev[0]});
  CHECK(ZNormalize(probe, st).At(0, 0) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("zero frames is an error") {
  CHECK_THROWS_AS(FitSpeakerStats("spk", {}), DataError);
}

TEST_CASE("dim mismatch is an error") {
  Tensor seq = Tensor::Matrix(2, 1, {0.0, 2.0});
  SpeakerStats st = FitSpeakerStats("spk", {&seq});
  Tensor wrong({2, 2});
  CHECK_THROWS_AS(ZNormalize(wrong, st), DataError);
}

TEST_CASE("wav files round-trip") {
  WavData wav;
  wav.sample_rate = 16000;
  Rng rng(31);
  wav.samples.resize(1234);
  for (double &v : wav.samples) v = rng.Uniform(-0.9, 0.9);
  std::string path = TempPath("artic-test.wav");
  WriteWav(path, wav);
  WavData back = ReadWav(path);
  CHECK(back.sample_rate == 16000);
  REQUIRE(back.samples.size() == wav.samples.size());
  for (size_t i = 0; i < wav.samples.size(); ++i)
    CHECK(back.samples[i] == doctest::Approx(wav.samples[i]).epsilon(1e-4));
  std::filesystem::remove(path);
}

TEST_CASE("feature files round-trip through f32") {
  Tensor frames({7, 5});
  Rng rng(37);
  for (double &v : frames.data)
    v = static_cast<float>(rng.Uniform(-3, 3));  // pre-round to f32
  std::string path = TempPath("artic-test.afea");
  WriteFeatureFile(path, frames, 10000);
  FeatureFile back = ReadFeatureFile(path);
  CHECK(back.frame_period_us == 10000);
  CHECK(back.frames.shape == frames.shape);
  CHECK(back.frames.data == frames.data);
  std::filesystem::remove(path);
}

TEST_CASE("track files keep their kind byte") {
  Tensor frames({3, 16});
  frames.Fill(1.5);
  std::string path = TempPath("artic-test.aart");
  WriteTrackFile(path, frames, TrackKind::kPellets, 5000);
  TrackFile back = ReadTrackFile(path);
  CHECK(back.kind == TrackKind::kPellets);
  CHECK(back.frame_period_us == 5000);
  CHECK(back.frames.data == frames.data);
  std::filesystem::remove(path);
}

TEST_CASE("resampling a 5 ms track to 10 ms picks original samples") {
  Tensor track({9, 2});  // 5 ms: frames 0..8 cover 0..40 ms
  for (int t = 0; t < 9; ++t) {
    track.At(t, 0) = t;
    track.At(t, 1) = -t;
  }
  Tensor out = ResampleTrack(track, 5000, 10000, 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(out.At(i, 0) == doctest::Approx(2.0 * i).epsilon(1e-12));
    CHECK(out.At(i, 1) == doctest::Approx(-2.0 * i).epsilon(1e-12));
  }
}

TEST_CASE("resampling clamps beyond the source span") {
  Tensor track({3, 1});
  track.At(0, 0) = 1.0;
  track.At(1, 0) = 2.0;
  track.At(2, 0) = 3.0;
  Tensor out = ResampleTrack(track, 10000, 10000, 5);
  CHECK(out.At(3, 0) == 3.0);
  CHECK(out.At(4, 0) == 3.0);
}
