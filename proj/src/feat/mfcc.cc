// feat/mfcc.cc

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

#include "feat/mfcc.h"

#include <algorithm>
#include <cmath>

#include "base/error.h"
#include "feat/spectrum.h"

namespace artic {

int NumFrames(int64_t num_samples, int window_samples, int hop_samples) {
  if (num_samples < window_samples) return 0;
  return static_cast<int>((num_samples - window_samples) / hop_samples) + 1;
}

Tensor ComputeMfcc(const std::vector<double> &samples, int sample_rate,
                   const MfccConfig &cfg) {
  if (sample_rate < 8000)
    throw DataError("sample rate below 8 kHz is not supported");
  const int window = static_cast<int>(std::lround(cfg.window_ms * sample_rate / 1000.0));
  const int hop = static_cast<int>(std::lround(cfg.hop_ms * sample_rate / 1000.0));
  const int num_frames = NumFrames(static_cast<int64_t>(samples.size()), window, hop);
  if (num_frames < 1)
    throw DataError("audio shorter than one analysis window");

  // Pre-emphasis over the whole signal before framing.
  std::vector<double> emph(samples.size());
  emph[0] = samples[0] * (1.0 - cfg.pre_emphasis);
  for (size_t i = 1; i < samples.size(); ++i)
    emph[i] = samples[i] - cfg.pre_emphasis * samples[i - 1];

  const int fft_size = NextPowerOfTwo(window);
  const int num_bins = fft_size / 2 + 1;
  const std::vector<double> ham = HammingWindow(window);
  const Tensor fb = MelFilterbank(cfg.num_mel_filters, fft_size, sample_rate,
                                  0.0, sample_rate / 2.0);
  const Tensor dct = DctMatrix(cfg.num_ceps, cfg.num_mel_filters);

  Tensor out({num_frames, cfg.num_ceps});
  std::vector<double> re(fft_size), im(fft_size), mag(num_bins);
  std::vector<double> mel(cfg.num_mel_filters);
  for (int t = 0; t < num_frames; ++t) {
    std::fill(re.begin(), re.end(), 0.0);
    std::fill(im.begin(), im.end(), 0.0);
    const double *frame = emph.data() + static_cast<int64_t>(t) * hop;
    for (int i = 0; i < window; ++i) re[i] = frame[i] * ham[i];
    Fft(&re, &im);
    for (int k = 0; k < num_bins; ++k)
      mag[k] = std::hypot(re[k], im[k]);
    for (int m = 0; m < cfg.num_mel_filters; ++m) {
      double e = 0.0;
      const double *row = fb.RowPtr(m);
      for (int k = 0; k < num_bins; ++k) e += row[k] * mag[k];
      mel[m] = std::log(std::max(e, cfg.log_floor));
    }
    for (int c = 0; c < cfg.num_ceps; ++c) {
      double v = 0.0;
      const double *row = dct.RowPtr(c);
      for (int m = 0; m < cfg.num_mel_filters; ++m) v += row[m] * mel[m];
      out.At(t, c) = v;
    }
  }
  return out;
}

namespace {

// One regression pass: delta_t = sum_n n*(x[t+n]-x[t-n]) / (2*sum_n n^2),
// with indices clamped to the sequence (edge replication).
Tensor Deltas(const Tensor &feats, int window) {
  const int n = feats.Rows(), d = feats.Cols();
  double denom = 0.0;
  for (int k = 1; k <= window; ++k) denom += 2.0 * k * k;
  Tensor out({n, d});
  for (int t = 0; t < n; ++t) {
    for (int j = 0; j < d; ++j) {
      double acc = 0.0;
      for (int k = 1; k <= window; ++k) {
        int hi = std::min(t + k, n - 1);
        int lo = std::max(t - k, 0);
        acc += k * (feats.At(hi, j) - feats.At(lo, j));
      }
      out.At(t, j) = acc / denom;
    }
  }
  return out;
}

}  // namespace

Tensor AppendDeltas(const Tensor &feats, int window) {
  if (feats.Rows() < 1) throw DataError("AppendDeltas: empty feature matrix");
  const int n = feats.Rows(), d = feats.Cols();
  Tensor d1 = Deltas(feats, window);
  Tensor d2 = Deltas(d1, window);
  Tensor out({n, 3 * d});
  for (int t = 0; t < n; ++t) {
    for (int j = 0; j < d; ++j) {
      out.At(t, j) = feats.At(t, j);
      out.At(t, d + j) = d1.At(t, j);
      out.At(t, 2 * d + j) = d2.At(t, j);
    }
  }
  return out;
}

}  // namespace artic
