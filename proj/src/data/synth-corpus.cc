// data/synth-corpus.cc

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

#include "data/synth-corpus.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <vector>

#include "base/error.h"
#include "base/io.h"
#include "base/rng.h"
#include "core/tensor.h"
#include "data/alignment.h"
#include "feat/feature-file.h"
#include "vtv/palate.h"
#include "vtv/prior-table.h"
#include "vtv/vtv-extract.h"

namespace artic {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kTrackPeriodUs = 5000;  // tracks are emitted on a 5 ms grid

std::vector<double> HammingKernel(int half_width) {
  int len = 2 * half_width + 1;
  std::vector<double> k(len);
  double sum = 0.0;
  for (int i = 0; i < len; ++i) {
    k[i] = len == 1 ? 1.0 : 0.54 - 0.46 * std::cos(2.0 * kPi * i / (len - 1));
    sum += k[i];
  }
  for (double &v : k) v /= sum;
  return k;
}

// FIR smoothing per column with edge replication.
Tensor SmoothColumns(const Tensor &in, int half_width) {
  const std::vector<double> kern = HammingKernel(half_width);
  const int n = in.Rows(), d = in.Cols();
  Tensor out({n, d});
  for (int t = 0; t < n; ++t)
    for (int j = 0; j < d; ++j) {
      double acc = 0.0;
      for (int dt = -half_width; dt <= half_width; ++dt) {
        int src = std::clamp(t + dt, 0, n - 1);
        acc += kern[dt + half_width] * in.At(src, j);
      }
      out.At(t, j) = acc;
    }
  return out;
}

// Doubles the frame rate by inserting linear midpoints (2N-1 frames).
Tensor UpsampleTwice(const Tensor &in) {
  const int n = in.Rows(), d = in.Cols();
  Tensor out({2 * n - 1, d});
  for (int t = 0; t < n; ++t)
    for (int j = 0; j < d; ++j) {
      out.At(2 * t, j) = in.At(t, j);
      if (t + 1 < n)
        out.At(2 * t + 1, j) = 0.5 * (in.At(t, j) + in.At(t + 1, j));
    }
  return out;
}

std::string SpeakerName(int i) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "S%02d", i);
  return buf;
}

std::string UttName(int i) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "u%03d", i);
  return buf;
}

std::string PhoneName(int i) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "p%02d", i);
  return buf;
}

// Per-phone integer targets in {-1, 0, 1}.  Each dimension's value counts
// across phones are kept as balanced as possible, so the global mean of a
// trajectory is near zero and per-phone means of the z-scored data land
// back on the integer grid.  Phones are ranked by a blend of a shared and
// a private score, which correlates the dimensions and gives coarticulation
// deviations a common component across features.
std::vector<PriorVector> MakeTargets(int num_phones, Rng &rng) {
  const double kSharedWeight = 0.5;
  std::vector<double> shared(num_phones);
  for (double &v : shared) v = rng.Gaussian();

  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<std::array<int, kNumVtvs>> vtv(num_phones);
    for (int d = 0; d < kNumVtvs; ++d) {
      std::vector<double> score(num_phones);
      std::vector<int> order(num_phones);
      for (int j = 0; j < num_phones; ++j) {
        score[j] = kSharedWeight * shared[j] +
                   (1.0 - kSharedWeight) * rng.Gaussian();
        order[j] = j;
      }
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return score[a] < score[b]; });
      int counts[3] = {num_phones / 3, num_phones / 3, num_phones / 3};
      for (int r = 0; r < num_phones % 3; ++r) ++counts[(d + r) % 3];
      int rank = 0;
      for (int v = 0; v < 3; ++v)
        for (int k = 0; k < counts[v]; ++k, ++rank) vtv[order[rank]][d] = v - 1;
    }
    std::set<std::array<int, kNumVtvs>> used(vtv.begin(), vtv.end());
    if (static_cast<int>(used.size()) < num_phones) continue;

    std::vector<PriorVector> out(num_phones);
    for (int j = 0; j < num_phones; ++j) {
      for (int d = 0; d < kNumVtvs; ++d) out[j][d] = vtv[j][d];
      out[j][6] = rng.UniformInt(2);  // VEL
      out[j][7] = rng.UniformInt(2);  // GLO
      out[j][8] = j % 2;              // consonant
      out[j][9] = 0;                  // silence
    }
    return out;
  }
  throw ConfigError(
      "synth: could not draw distinct phone targets; reduce num_phones");
}

struct SpeakerModel {
  // Affine distortion of the 10-dim articulatory state.
  std::array<double, kNumPriorFeatures> scale{}, offset{};
  // Palate dome y = h - a * (x - c)^2 over [c - 4, c + 4].
  PalateModel palate;
  // Mixing channel applied to the observation features.  Off-diagonal
  // terms rotate the feature basis per speaker, so per-dimension speaker
  // normalization cannot undo it.
  Tensor channel;
};

SpeakerModel MakeSpeaker(uint64_t seed, char gender, int obs_dim,
                         double channel_strength) {
  Rng rng(seed);
  SpeakerModel s;
  double scale_mult = gender == 'M' ? 1.06 : 0.96;
  double offset_shift = gender == 'M' ? 0.15 : -0.15;
  for (int d = 0; d < kNumPriorFeatures; ++d) {
    s.scale[d] = scale_mult * rng.Uniform(0.85, 1.2);
    s.offset[d] = offset_shift + rng.Uniform(-0.4, 0.4);
  }
  double a = rng.Uniform(0.08, 0.14);
  double c = rng.Uniform(4.5, 5.5);
  double h = rng.Uniform(2.8, 3.2);
  // y = h - a (x - c)^2 = -a x^2 + 2ac x + h - a c^2
  s.palate.a = -a;
  s.palate.b = 2.0 * a * c;
  s.palate.c = h - a * c * c;
  s.palate.x_min = c - 4.0;
  s.palate.x_max = c + 4.0;
  s.channel = Tensor({obs_dim, obs_dim});
  const double mix = channel_strength / std::sqrt(static_cast<double>(obs_dim));
  for (int i = 0; i < obs_dim; ++i)
    for (int j = 0; j < obs_dim; ++j)
      s.channel.At(i, j) = (i == j ? 1.0 : 0.0) + mix * rng.Gaussian();
  return s;
}

Tensor ApplyChannel(const Tensor &x, const Tensor &channel) {
  const int n = x.Rows(), d = x.Cols();
  Tensor out({n, d});
  for (int t = 0; t < n; ++t)
    for (int o = 0; o < d; ++o) {
      double acc = 0.0;
      for (int k = 0; k < d; ++k) acc += channel.At(o, k) * x.At(t, k);
      out.At(t, o) = acc;
    }
  return out;
}

double ArcInverse(const PalateModel &p, double s) {
  double lo = p.x_min, hi = p.x_max;
  for (int i = 0; i < 60; ++i) {
    double mid = 0.5 * (lo + hi);
    if (p.ArcLength(mid) < s)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Places a point at distance d below the palate along the inward normal at
// curve position x.
void OnNormal(const PalateModel &p, double x, double d, double *ox,
              double *oy) {
  double slope = p.Slope(x);
  double inv = 1.0 / std::sqrt(1.0 + slope * slope);
  *ox = x + d * slope * inv;
  *oy = p.Eval(x) - d * inv;
}

Tensor PelletsFromVtvs(const Tensor &m, const SpeakerModel &spk) {
  const PalateModel &pal = spk.palate;
  const double total_arc = pal.ArcLength(pal.x_max);
  const int n = m.Rows();
  Tensor pt({n, kNumPelletDims});
  for (int t = 0; t < n; ++t) {
    double lp = m.At(t, kLp), la = m.At(t, kLa);
    double ttcl = m.At(t, kTtcl), ttcd = m.At(t, kTtcd);
    double tbcl = m.At(t, kTbcl), tbcd = m.At(t, kTbcd);

    double ulx = 1.2 + 0.25 * lp;
    double uly = pal.Eval(pal.x_min) + 0.8;
    pt.At(t, kUlX) = ulx;
    pt.At(t, kUlY) = uly;
    pt.At(t, kLlX) = ulx;
    pt.At(t, kLlY) = uly - std::max(1.1 + 0.2 * la, 0.02);

    double s_tip = total_arc * std::clamp(0.28 + 0.05 * ttcl, 0.03, 0.47);
    double d_tip = std::max(0.9 + 0.16 * ttcd, 0.05);
    double t1x, t1y;
    OnNormal(pal, ArcInverse(pal, s_tip), d_tip, &t1x, &t1y);
    double s_body = total_arc * std::clamp(0.68 + 0.05 * tbcl, 0.53, 0.97);
    double d_body = std::max(0.9 + 0.16 * tbcd, 0.05);
    double t4x, t4y;
    OnNormal(pal, ArcInverse(pal, s_body), d_body, &t4x, &t4y);
    pt.At(t, kT1X) = t1x;
    pt.At(t, kT1Y) = t1y;
    pt.At(t, kT4X) = t4x;
    pt.At(t, kT4Y) = t4y;
    pt.At(t, kT2X) = 0.67 * t1x + 0.33 * t4x;
    pt.At(t, kT2Y) = 0.67 * t1y + 0.33 * t4y - 0.15;
    pt.At(t, kT3X) = 0.33 * t1x + 0.67 * t4x;
    pt.At(t, kT3Y) = 0.33 * t1y + 0.67 * t4y - 0.18;
    pt.At(t, kMniX) = 0.8 + 0.05 * la;
    pt.At(t, kMniY) = -1.5 - 0.1 * tbcd;
    pt.At(t, kMnmX) = pal.x_max + 0.5;
    pt.At(t, kMnmY) = -1.2 - 0.08 * ttcd;
  }
  return pt;
}

struct MixingNet {
  Tensor m1;  // hidden x 10
  Tensor m2;  // obs x hidden
  std::vector<double> b1, b2;
};

MixingNet MakeMixingNet(int obs_dim, int hidden_dim, uint64_t seed) {
  Rng rng(seed);
  MixingNet net;
  net.m1 = Tensor({hidden_dim, kNumPriorFeatures});
  for (int i = 0; i < hidden_dim; ++i) {
    double norm = 0.0;
    for (int j = 0; j < kNumPriorFeatures; ++j) {
      double v = rng.Gaussian();
      net.m1.At(i, j) = v;
      norm += v * v;
    }
    norm = std::sqrt(norm);
    for (int j = 0; j < kNumPriorFeatures; ++j) net.m1.At(i, j) /= norm;
  }
  net.m2 = Tensor({obs_dim, hidden_dim});
  double scale = 1.0 / std::sqrt(static_cast<double>(hidden_dim));
  for (int64_t i = 0; i < net.m2.NumEl(); ++i)
    net.m2.data[i] = scale * rng.Gaussian();
  net.b1.resize(hidden_dim);
  for (double &v : net.b1) v = rng.Uniform(-0.3, 0.3);
  net.b2.resize(obs_dim);
  for (double &v : net.b2) v = rng.Uniform(-0.3, 0.3);
  return net;
}

Tensor Observe(const Tensor &a, const MixingNet &net, double noise_sigma,
               Rng &rng) {
  const int n = a.Rows();
  const int hidden = net.m1.Rows(), obs = net.m2.Rows();
  Tensor x({n, obs});
  std::vector<double> h(hidden);
  for (int t = 0; t < n; ++t) {
    for (int i = 0; i < hidden; ++i) {
      double acc = net.b1[i];
      for (int j = 0; j < kNumPriorFeatures; ++j)
        acc += net.m1.At(i, j) * a.At(t, j);
      h[i] = std::tanh(acc);
    }
    for (int o = 0; o < obs; ++o) {
      double acc = net.b2[o];
      for (int i = 0; i < hidden; ++i) acc += net.m2.At(o, i) * h[i];
      x.At(t, o) = acc + noise_sigma * rng.Gaussian();
    }
  }
  return x;
}

}  // namespace

SynthPaths GenerateSynthCorpus(const SynthConfig &cfg) {
  if (cfg.num_phones < 3 || cfg.num_speakers < 2)
    throw ConfigError("synth: need at least 3 phones and 2 speakers");
  MakeDirs(cfg.out_dir);

  Rng target_rng(MixSeed(cfg.seed, "targets"));
  std::vector<PriorVector> targets = MakeTargets(cfg.num_phones, target_rng);

  PriorTable lf;
  lf.provenance = "LF";
  for (int j = 0; j < cfg.num_phones; ++j) lf.Set(PhoneName(j), targets[j]);
  PriorVector sil{};
  sil[9] = 1;
  lf.Set("sil", sil);
  std::string lf_path = cfg.out_dir + "/lf-table.txt";
  lf.Save(lf_path);

  MixingNet net =
      MakeMixingNet(cfg.obs_dim, cfg.hidden_dim, MixSeed(cfg.seed, "mixing"));

  std::ostringstream manifest_pt, manifest_vtv;
  for (int s = 0; s < cfg.num_speakers; ++s) {
    std::string spk = SpeakerName(s);
    char gender = s % 2 == 0 ? 'M' : 'F';
    SpeakerModel model =
        MakeSpeaker(MixSeed(cfg.seed, "speaker-" + spk), gender);

    for (int u = 0; u < cfg.num_utts; ++u) {
      std::string utt = UttName(u);
      Rng rng(MixSeed(cfg.seed, spk + "-" + utt));

      // Phone sequence and per-frame targets.
      std::vector<int> seq;  // -1 marks silence
      std::vector<int> dwell;
      seq.push_back(-1);
      dwell.push_back(cfg.sil_frames);
      int prev = -1;
      for (int k = 0; k < cfg.segments_per_utt; ++k) {
        int ph = rng.UniformInt(cfg.num_phones);
        while (ph == prev) ph = rng.UniformInt(cfg.num_phones);
        seq.push_back(ph);
        dwell.push_back(cfg.min_dwell +
                        rng.UniformInt(cfg.max_dwell - cfg.min_dwell + 1));
        prev = ph;
      }
      seq.push_back(-1);
      dwell.push_back(cfg.sil_frames);

      int total = 0;
      for (int f : dwell) total += f;
      Tensor q({total, kNumPriorFeatures});
      PhoneAlignment ali;
      int frame = 0;
      for (size_t k = 0; k < seq.size(); ++k) {
        const PriorVector &v = seq[k] < 0 ? sil : targets[seq[k]];
        PhoneSegment seg;
        seg.start_s = frame * 0.010;
        for (int f = 0; f < dwell[k]; ++f, ++frame)
          for (int j = 0; j < kNumPriorFeatures; ++j)
            q.At(frame, j) = static_cast<double>(v[j]);
        seg.end_s = frame * 0.010;
        seg.phone = seq[k] < 0 ? "sil" : PhoneName(seq[k]);
        ali.push_back(seg);
      }

      // Ground-truth articulation: smoothed targets plus correlated jitter.
      Tensor truth = SmoothColumns(q, 4);
      Tensor jitter({total, kNumPriorFeatures});
      for (int64_t i = 0; i < jitter.NumEl(); ++i)
        jitter.data[i] = cfg.jitter_sigma * rng.Gaussian();
      jitter = SmoothColumns(jitter, 2);
      for (int64_t i = 0; i < truth.NumEl(); ++i)
        truth.data[i] += jitter.data[i];

      // Speaker-distorted articulation; first 6 dims are the measured VTVs.
      Tensor distorted({total, kNumPriorFeatures});
      for (int t = 0; t < total; ++t)
        for (int j = 0; j < kNumPriorFeatures; ++j)
          distorted.At(t, j) =
              model.scale[j] * truth.At(t, j) + model.offset[j];
      Tensor measured_vtv({total, kNumVtvs});
      for (int t = 0; t < total; ++t)
        for (int j = 0; j < kNumVtvs; ++j)
          measured_vtv.At(t, j) = distorted.At(t, j);

      Tensor x = Observe(distorted, net, cfg.noise_sigma, rng);
      Tensor pt = PelletsFromVtvs(measured_vtv, model);

      std::string base = spk + "-" + utt;
      WriteFeatureFile(cfg.out_dir + "/" + base + ".afea", x,
                       kDefaultFramePeriodUs);
      WriteAlignment(cfg.out_dir + "/" + base + ".ali", ali);
      WriteTrackFile(cfg.out_dir + "/" + base + ".vtv.aart",
                     UpsampleTwice(measured_vtv), TrackKind::kVtv,
                     kTrackPeriodUs);
      WriteTrackFile(cfg.out_dir + "/" + base + ".pt.aart",
                     UpsampleTwice(pt), TrackKind::kPellets, kTrackPeriodUs);

      std::string common = spk + " " + std::string(1, gender) + " " + utt +
                           " " + base + ".afea " + base + ".ali ";
      manifest_pt << common << base << ".pt.aart\n";
      manifest_vtv << common << base << ".vtv.aart\n";
    }
  }

  SynthPaths paths;
  paths.lf_table = lf_path;
  paths.manifest_pt = cfg.out_dir + "/manifest-pt.txt";
  paths.manifest_vtv = cfg.out_dir + "/manifest-vtv.txt";
  WriteTextFile(paths.manifest_pt, manifest_pt.str());
  WriteTextFile(paths.manifest_vtv, manifest_vtv.str());
  return paths;
}

}  // namespace artic
