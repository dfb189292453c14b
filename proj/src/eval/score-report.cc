// eval/score-report.cc

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

#include "eval/score-report.h"

#include <cstdio>
#include <map>
#include <sstream>

#include "base/error.h"
#include "base/io.h"
#include "eval/metrics.h"

namespace artic {

namespace {

std::string FormatCell(double v, bool present) {
  if (!present) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

// Per-feature scores over one pooled pred/meas block.
std::vector<FeatureScore> ScoreBlock(const Tensor &pred, const Tensor &meas,
                                     const std::vector<std::string> &names,
                                     bool with_rmse) {
  std::vector<FeatureScore> out(names.size());
  const Tensor rmse = with_rmse ? NormalizedRmse(pred, meas) : Tensor({1});
  const int n = pred.Rows();
  std::vector<double> a(n), b(n);
  for (size_t j = 0; j < names.size(); ++j) {
    FeatureScore &fs = out[j];
    fs.name = names[j];
    if (with_rmse) {
      fs.rmse = rmse.data[j];
      fs.has_rmse = true;
    }
    for (int t = 0; t < n; ++t) {
      a[t] = pred.At(t, static_cast<int>(j));
      b[t] = meas.At(t, static_cast<int>(j));
    }
    double r = 0.0;
    if (TryPearsonR(a.data(), b.data(), n, &r)) {
      fs.r = r;
      fs.has_r = true;
    } else {
      fs.undefined_r = 1;
    }
  }
  return out;
}

// Mean of the defined entries of one metric across feature scores.
void AverageMetric(const std::vector<FeatureScore> &rows, bool use_rmse,
                   double *mean_out, bool *has_out) {
  double sum = 0.0;
  int count = 0;
  for (const FeatureScore &fs : rows) {
    const bool has = use_rmse ? fs.has_rmse : fs.has_r;
    if (!has) continue;
    sum += use_rmse ? fs.rmse : fs.r;
    ++count;
  }
  *has_out = count > 0;
  *mean_out = count > 0 ? sum / count : 0.0;
}

void AppendRow(std::ostringstream &os, const std::string &section,
               const FeatureScore &fs) {
  os << section << '\t' << fs.name << '\t' << FormatCell(fs.rmse, fs.has_rmse)
     << '\t' << FormatCell(fs.r, fs.has_r) << '\t' << fs.undefined_r << '\n';
}

}  // namespace

ScoreReport ScoreSequences(const std::vector<ScoredSequence> &seqs,
                           const std::vector<std::string> &feature_names,
                           bool with_rmse) {
  if (seqs.empty()) throw DataError("scoring: no sequences");
  const int dim = static_cast<int>(feature_names.size());
  for (const ScoredSequence &s : seqs) {
    if (!s.pred.SameShape(s.meas))
      throw DataError("scoring: pred/meas shape mismatch for " + s.speaker);
    if (s.pred.Cols() != dim)
      throw DataError("scoring: " + s.speaker + " has " +
                      std::to_string(s.pred.Cols()) + " features, expected " +
                      std::to_string(dim));
  }

  // Pool frames per speaker, keeping first-appearance order.
  std::vector<std::string> speaker_order;
  std::map<std::string, std::pair<std::vector<const Tensor *>,
                                  std::vector<const Tensor *>>>
      by_speaker;
  for (const ScoredSequence &s : seqs) {
    auto it = by_speaker.find(s.speaker);
    if (it == by_speaker.end()) speaker_order.push_back(s.speaker);
    by_speaker[s.speaker].first.push_back(&s.pred);
    by_speaker[s.speaker].second.push_back(&s.meas);
  }

  ScoreReport report;
  report.feature_names = feature_names;
  for (const std::string &spk : speaker_order) {
    const auto &[preds, meass] = by_speaker[spk];
    int total = 0;
    for (const Tensor *t : preds) total += t->Rows();
    Tensor pred({total, dim}), meas({total, dim});
    int row = 0;
    for (size_t i = 0; i < preds.size(); ++i) {
      for (int t = 0; t < preds[i]->Rows(); ++t, ++row)
        for (int j = 0; j < dim; ++j) {
          pred.At(row, j) = preds[i]->At(t, j);
          meas.At(row, j) = meass[i]->At(t, j);
        }
    }
    SpeakerScore ss;
    ss.speaker = spk;
    ss.num_frames = total;
    ss.features = ScoreBlock(pred, meas, feature_names, with_rmse);
    report.speakers.push_back(std::move(ss));
  }

  // Headline: average each feature's metrics over speakers with a defined
  // value; count the excluded ones.
  report.headline.resize(dim);
  for (int j = 0; j < dim; ++j) {
    FeatureScore &fs = report.headline[j];
    fs.name = feature_names[j];
    double rmse_sum = 0.0, r_sum = 0.0;
    int rmse_n = 0, r_n = 0;
    for (const SpeakerScore &ss : report.speakers) {
      const FeatureScore &sf = ss.features[j];
      if (sf.has_rmse) {
        rmse_sum += sf.rmse;
        ++rmse_n;
      }
      if (sf.has_r) {
        r_sum += sf.r;
        ++r_n;
      } else {
        ++fs.undefined_r;
      }
    }
    if (rmse_n > 0) {
      fs.rmse = rmse_sum / rmse_n;
      fs.has_rmse = true;
    }
    if (r_n > 0) {
      fs.r = r_sum / r_n;
      fs.has_r = true;
    }
    report.undefined_r_total += fs.undefined_r;
  }

  // Globally pooled block.
  int total = 0;
  for (const ScoredSequence &s : seqs) total += s.pred.Rows();
  Tensor pred({total, dim}), meas({total, dim});
  int row = 0;
  for (const ScoredSequence &s : seqs)
    for (int t = 0; t < s.pred.Rows(); ++t, ++row)
      for (int j = 0; j < dim; ++j) {
        pred.At(row, j) = s.pred.At(t, j);
        meas.At(row, j) = s.meas.At(t, j);
      }
  report.pooled = ScoreBlock(pred, meas, feature_names, with_rmse);

  AverageMetric(report.headline, true, &report.avg_rmse, &report.has_avg_rmse);
  AverageMetric(report.headline, false, &report.avg_r, &report.has_avg_r);
  AverageMetric(report.pooled, true, &report.pooled_avg_rmse,
                &report.has_pooled_avg_rmse);
  AverageMetric(report.pooled, false, &report.pooled_avg_r,
                &report.has_pooled_avg_r);
  return report;
}

std::string ScoreReport::ToTsv() const {
  std::ostringstream os;
  os << "# model=" << model << "\tsplit=" << split << "\tpriors=" << priors
     << '\n';
  for (const std::string &note : notes) os << "# " << note << '\n';
  os << "section\tfeature\trmse\tr\tundefined_r\n";
  for (const FeatureScore &fs : headline) AppendRow(os, "headline", fs);
  FeatureScore avg;
  avg.name = "AVG";
  avg.rmse = avg_rmse;
  avg.has_rmse = has_avg_rmse;
  avg.r = avg_r;
  avg.has_r = has_avg_r;
  avg.undefined_r = undefined_r_total;
  AppendRow(os, "headline", avg);
  for (const FeatureScore &fs : pooled) AppendRow(os, "pooled", fs);
  FeatureScore pavg;
  pavg.name = "AVG";
  pavg.rmse = pooled_avg_rmse;
  pavg.has_rmse = has_pooled_avg_rmse;
  pavg.r = pooled_avg_r;
  pavg.has_r = has_pooled_avg_r;
  AppendRow(os, "pooled", pavg);
  for (const SpeakerScore &ss : speakers)
    for (const FeatureScore &fs : ss.features)
      AppendRow(os, "speaker:" + ss.speaker, fs);
  return os.str();
}

void ScoreReport::Save(const std::string &path) const {
  WriteTextFile(path, ToTsv());
}

}  // namespace artic
