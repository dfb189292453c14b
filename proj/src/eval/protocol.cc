// eval/protocol.cc

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

#include "eval/protocol.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "base/error.h"
#include "base/io.h"
#include "base/rng.h"
#include "model/autoencoder.h"
#include "model/resdnn.h"
#include "vtv/vtv-extract.h"

namespace artic {

namespace {

std::string Fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::vector<std::string> ArticFeatureNames(int dim) {
  std::vector<std::string> names;
  if (dim == kNumVtvs) {
    names.assign(kVtvNames, kVtvNames + kNumVtvs);
  } else if (dim == kNumPelletDims) {
    names.assign(kPelletDimNames, kPelletDimNames + kNumPelletDims);
  } else {
    for (int i = 0; i < dim; ++i) names.push_back("f" + std::to_string(i));
  }
  return names;
}

const AlignedUtterance &RequireArtic(const AlignedUtterance &utt) {
  if (!utt.has_artic)
    throw DataError("scoring: " + utt.speaker + "-" + utt.utt_id +
                    " has no articulatory track");
  return utt;
}

// First kNumVtvs columns of a generated prior-space matrix.
Tensor VtvColumns(const Tensor &gen) {
  if (gen.Cols() < kNumVtvs)
    throw DataError("scoring: generated vectors have " +
                    std::to_string(gen.Cols()) + " dims, need " +
                    std::to_string(kNumVtvs));
  Tensor out({gen.Rows(), kNumVtvs});
  for (int t = 0; t < gen.Rows(); ++t)
    for (int j = 0; j < kNumVtvs; ++j) out.At(t, j) = gen.At(t, j);
  return out;
}

std::vector<const AlignedUtterance *> Pointers(
    const std::vector<AlignedUtterance> &utts) {
  std::vector<const AlignedUtterance *> out;
  out.reserve(utts.size());
  for (const AlignedUtterance &u : utts) out.push_back(&u);
  return out;
}

void MeanAndStd(const std::vector<double> &values, double *mean, double *std) {
  *mean = 0.0;
  *std = 0.0;
  if (values.empty()) return;
  for (double v : values) *mean += v;
  *mean /= values.size();
  if (values.size() < 2) return;
  double ss = 0.0;
  for (double v : values) ss += (v - *mean) * (v - *mean);
  *std = std::sqrt(ss / (values.size() - 1));
}

}  // namespace

std::string ModelKindName(ModelKind kind) {
  switch (kind) {
    case ModelKind::kBlstm: return "blstm";
    case ModelKind::kAe1: return "ae1";
    case ModelKind::kAe2: return "ae2";
    case ModelKind::kResDnn: return "resdnn";
  }
  throw ConfigError("unknown model kind");
}

ModelKind ParseModelKind(const std::string &name) {
  if (name == "blstm") return ModelKind::kBlstm;
  if (name == "ae1") return ModelKind::kAe1;
  if (name == "ae2") return ModelKind::kAe2;
  if (name == "resdnn") return ModelKind::kResDnn;
  throw ConfigError("unknown model kind: " + name);
}

std::string InputKindName(InputKind kind) {
  switch (kind) {
    case InputKind::kMfcc: return "mfcc";
    case InputKind::kPhones: return "phones";
    case InputKind::kLf: return "lf";
    case InputKind::kSf: return "sf";
    case InputKind::kMfccPhones: return "mfcc+phones";
    case InputKind::kMfccLf: return "mfcc+lf";
    case InputKind::kMfccSf: return "mfcc+sf";
  }
  throw ConfigError("unknown input kind");
}

InputKind ParseInputKind(const std::string &name) {
  if (name == "mfcc") return InputKind::kMfcc;
  if (name == "phones") return InputKind::kPhones;
  if (name == "lf") return InputKind::kLf;
  if (name == "sf") return InputKind::kSf;
  if (name == "mfcc+phones") return InputKind::kMfccPhones;
  if (name == "mfcc+lf") return InputKind::kMfccLf;
  if (name == "mfcc+sf") return InputKind::kMfccSf;
  throw ConfigError("unknown input kind: " + name);
}

void PriorTables::Put(const PriorTable *table) {
  if (table == nullptr) throw ConfigError("prior tables: null table");
  if (table->provenance.empty())
    throw ConfigError("prior tables: table has no provenance label");
  by_name[table->provenance] = table;
}

const PriorTable *PriorTables::Find(const std::string &name) const {
  auto it = by_name.find(name);
  return it == by_name.end() ? nullptr : it->second;
}

const PriorTable &PriorTables::Require(const std::string &name) const {
  const PriorTable *table = Find(name);
  if (table == nullptr)
    throw ConfigError("no prior table with provenance " + name);
  return *table;
}

std::vector<std::string> PhoneInventory(const Corpus &corpus,
                                        const PriorTable *table) {
  if (table != nullptr) return table->Phones();
  std::set<std::string> phones;
  for (const AlignedUtterance &utt : corpus.utts)
    phones.insert(utt.frame_phones.begin(), utt.frame_phones.end());
  return {phones.begin(), phones.end()};
}

namespace {

Tensor OneHotPhones(const AlignedUtterance &utt,
                    const std::vector<std::string> &inventory) {
  const int n = utt.NumFrames(), p = static_cast<int>(inventory.size());
  if (p == 0) throw DataError("one-hot encoding: empty phone inventory");
  Tensor out = Tensor::Zeros({n, p});
  for (int t = 0; t < n; ++t) {
    const auto it = std::lower_bound(inventory.begin(), inventory.end(),
                                     utt.frame_phones[t]);
    if (it == inventory.end() || *it != utt.frame_phones[t])
      throw DataError("one-hot encoding: phone " + utt.frame_phones[t] +
                      " not in the inventory");
    out.At(t, static_cast<int>(it - inventory.begin())) = 1.0;
  }
  return out;
}

Tensor ConcatColumns(const Tensor &a, const Tensor &b) {
  if (a.Rows() != b.Rows())
    throw DataError("input assembly: row mismatch " + a.ShapeString() +
                    " vs " + b.ShapeString());
  Tensor out({a.Rows(), a.Cols() + b.Cols()});
  for (int t = 0; t < a.Rows(); ++t) {
    for (int j = 0; j < a.Cols(); ++j) out.At(t, j) = a.At(t, j);
    for (int j = 0; j < b.Cols(); ++j) out.At(t, a.Cols() + j) = b.At(t, j);
  }
  return out;
}

}  // namespace

Tensor AssembleInput(const AlignedUtterance &utt, InputKind kind,
                     const PriorTables &tables,
                     const std::vector<std::string> &phone_inventory) {
  switch (kind) {
    case InputKind::kMfcc:
      return utt.acoustics;
    case InputKind::kPhones:
      return OneHotPhones(utt, phone_inventory);
    case InputKind::kLf:
      return PriorsForFrames(utt.frame_phones, tables.Require("LF"));
    case InputKind::kSf:
      return PriorsForFrames(utt.frame_phones, tables.Require("SF"));
    case InputKind::kMfccPhones:
      return ConcatColumns(utt.acoustics, OneHotPhones(utt, phone_inventory));
    case InputKind::kMfccLf:
      return ConcatColumns(
          utt.acoustics, PriorsForFrames(utt.frame_phones,
                                         tables.Require("LF")));
    case InputKind::kMfccSf:
      return ConcatColumns(
          utt.acoustics, PriorsForFrames(utt.frame_phones,
                                         tables.Require("SF")));
  }
  throw ConfigError("unknown input kind");
}

std::vector<AlignedUtterance> WithPriors(const Corpus &corpus,
                                         const std::vector<int> &utts,
                                         const PriorTable &table) {
  std::vector<AlignedUtterance> out;
  out.reserve(utts.size());
  for (int idx : utts) {
    AlignedUtterance copy = corpus.utts.at(idx);
    copy.priors = PriorsForFrames(copy.frame_phones, table);
    out.push_back(std::move(copy));
  }
  return out;
}

ScoreReport ScoreBaseline(const Corpus &corpus, const std::vector<int> &utts,
                          const PriorTable &table) {
  if (utts.empty()) throw DataError("baseline scoring: no utterances");
  std::vector<ScoredSequence> seqs;
  seqs.reserve(utts.size());
  for (int idx : utts) {
    const AlignedUtterance &utt = RequireArtic(corpus.utts.at(idx));
    ScoredSequence s;
    s.speaker = utt.speaker;
    s.pred = VtvColumns(PriorsForFrames(utt.frame_phones, table));
    s.meas = utt.artic;
    seqs.push_back(std::move(s));
  }
  ScoreReport report =
      ScoreSequences(seqs, ArticFeatureNames(kNumVtvs),
                     /*with_rmse=*/table.provenance != "LF");
  report.model = "baseline";
  report.priors = table.provenance;
  return report;
}

std::unique_ptr<WindowModel> BuildWeakModel(const RunSpec &spec, int obs_dim,
                                            uint64_t seed) {
  switch (spec.model) {
    case ModelKind::kAe1: {
      AutoencoderConfig cfg = AutoencoderConfig::Ae1Defaults();
      cfg.context = spec.context;
      cfg.obs_dim = obs_dim;
      cfg.encoder_widths = spec.encoder_widths;
      cfg.lambda = spec.lambda_z;
      return std::make_unique<Ae1Model>(cfg, seed);
    }
    case ModelKind::kAe2: {
      AutoencoderConfig cfg = AutoencoderConfig::Ae2Defaults();
      cfg.context = spec.context;
      cfg.obs_dim = obs_dim;
      cfg.encoder_widths = spec.encoder_widths;
      cfg.lambda = spec.lambda_x;
      return std::make_unique<Ae2Model>(cfg, seed);
    }
    case ModelKind::kResDnn: {
      ResDnnConfig cfg;
      cfg.context = spec.context;
      cfg.obs_dim = obs_dim;
      cfg.trunk_widths = spec.trunk_widths;
      cfg.lambda_w = spec.lambda_w;
      cfg.per_component = spec.residual_per_component;
      return std::make_unique<ResDnnModel>(cfg, seed);
    }
    case ModelKind::kBlstm:
      throw ConfigError("blstm is not a window model");
  }
  throw ConfigError("unknown model kind");
}

ScoreReport ScoreWeakModel(const WindowModel &model, const RunSpec &spec,
                           const std::vector<AlignedUtterance> &utts) {
  if (utts.empty()) throw DataError("weak-model scoring: no utterances");
  const Ae2Model *ae2 = dynamic_cast<const Ae2Model *>(&model);
  std::vector<ScoredSequence> seqs;
  seqs.reserve(utts.size());
  for (const AlignedUtterance &utt : utts) {
    RequireArtic(utt);
    Tensor gen = (spec.ae2_average_windows && ae2 != nullptr)
                     ? Ae2ReconstructAveraged(*ae2, utt)
                     : GenerateSequence(model, utt);
    ScoredSequence s;
    s.speaker = utt.speaker;
    s.pred = VtvColumns(gen);
    s.meas = utt.artic;
    seqs.push_back(std::move(s));
  }
  ScoreReport report =
      ScoreSequences(seqs, ArticFeatureNames(kNumVtvs),
                     /*with_rmse=*/spec.priors != "LF");
  report.model = ModelKindName(spec.model);
  report.priors = spec.priors;
  return report;
}

ScoreReport ScoreBlstmModel(const BlstmModel &model, const RunSpec &spec,
                            const Corpus &corpus, const std::vector<int> &utts,
                            const PriorTables &tables,
                            const std::vector<std::string> &phone_inventory) {
  if (utts.empty()) throw DataError("sequence-model scoring: no utterances");
  std::vector<ScoredSequence> seqs;
  seqs.reserve(utts.size());
  int dim = -1;
  for (int idx : utts) {
    const AlignedUtterance &utt = RequireArtic(corpus.utts.at(idx));
    ScoredSequence s;
    s.speaker = utt.speaker;
    s.pred = model.Forward(
        AssembleInput(utt, spec.input, tables, phone_inventory));
    s.meas = utt.artic;
    dim = s.meas.Cols();
    seqs.push_back(std::move(s));
  }
  ScoreReport report =
      ScoreSequences(seqs, ArticFeatureNames(dim), /*with_rmse=*/true);
  report.model = "blstm[" + InputKindName(spec.input) + "]";
  return report;
}

void FinalizeProtocolResult(ProtocolResult *result) {
  std::vector<double> rs, rmses;
  for (const ProtocolRun &run : result->runs) {
    if (run.report.has_avg_r) rs.push_back(run.report.avg_r);
    if (run.report.has_avg_rmse) rmses.push_back(run.report.avg_rmse);
  }
  MeanAndStd(rs, &result->mean_r, &result->std_r);
  MeanAndStd(rmses, &result->mean_rmse, &result->std_rmse);
  result->has_rmse = !rmses.empty();
}

ParameterSet &TrainedModel::Params() {
  if (window != nullptr) return window->Params();
  if (blstm != nullptr) return blstm->Params();
  throw ConfigError("trained model holds no model");
}

TrainedModel TrainOnce(const Corpus &corpus, const SplitPlan &plan,
                       const RunSpec &spec, const PriorTables &tables,
                       uint64_t seed) {
  const std::vector<std::string> &train_speakers =
      spec.train_speakers.empty() ? plan.train : spec.train_speakers;
  const std::vector<int> train_idx = corpus.UttsOfSpeakers(train_speakers);
  const std::vector<int> valid_idx = corpus.UttsOfSpeakers(plan.valid);
  if (train_idx.empty()) throw ConfigError("protocol: empty train set");
  TrainerConfig tcfg = spec.trainer;
  tcfg.seed = seed;

  TrainedModel out;
  if (spec.model == ModelKind::kBlstm) {
    out.phone_inventory = PhoneInventory(corpus, tables.Find("LF"));
    auto assemble = [&](const std::vector<int> &idx, std::vector<Tensor> *in,
                        std::vector<SequenceExample> *ex) {
      in->reserve(idx.size());
      for (int i : idx) {
        const AlignedUtterance &utt = RequireArtic(corpus.utts.at(i));
        in->push_back(
            AssembleInput(utt, spec.input, tables, out.phone_inventory));
        ex->push_back({&in->back(), &utt.artic});
      }
    };
    std::vector<Tensor> train_in, valid_in;
    std::vector<SequenceExample> train_ex, valid_ex;
    assemble(train_idx, &train_in, &train_ex);
    assemble(valid_idx, &valid_in, &valid_ex);
    BlstmConfig bcfg;
    bcfg.input_dim = train_in.front().Cols();
    bcfg.output_dim = corpus.utts.at(train_idx.front()).artic.Cols();
    bcfg.num_layers = spec.blstm_layers;
    bcfg.hidden = spec.blstm_hidden;
    out.blstm = std::make_unique<BlstmModel>(bcfg, MixSeed(seed, "model"));
    out.log = TrainSequenceModel(out.blstm.get(), train_ex, valid_ex, tcfg);
  } else {
    const PriorTable &table = tables.Require(spec.priors);
    std::vector<AlignedUtterance> train = WithPriors(corpus, train_idx, table);
    std::vector<AlignedUtterance> valid = WithPriors(corpus, valid_idx, table);
    const int obs_dim = train.front().acoustics.Cols();
    out.window = BuildWeakModel(spec, obs_dim, MixSeed(seed, "model"));
    out.log = TrainWindowModel(out.window.get(), Pointers(train),
                               Pointers(valid), tcfg);
  }
  return out;
}

ProtocolResult RunProtocol(const Corpus &corpus, const SplitPlan &plan,
                           const RunSpec &spec, const PriorTables &tables) {
  if (spec.seeds.empty()) throw ConfigError("protocol: no seeds");
  const std::vector<int> test_idx = corpus.UttsOfSpeakers(plan.test);
  if (test_idx.empty()) throw ConfigError("protocol: empty test set");

  ProtocolResult result;
  for (uint64_t seed : spec.seeds) {
    ProtocolRun run;
    run.seed = seed;
    TrainedModel trained = TrainOnce(corpus, plan, spec, tables, seed);
    run.log = trained.log;
    if (trained.blstm != nullptr) {
      run.report = ScoreBlstmModel(*trained.blstm, spec, corpus, test_idx,
                                   tables, trained.phone_inventory);
    } else {
      const PriorTable &table = tables.Require(spec.priors);
      run.report = ScoreWeakModel(
          *trained.window, spec, WithPriors(corpus, test_idx, table));
    }
    run.report.split = SplitKindName(plan.kind);
    run.report.notes.push_back("seed=" + std::to_string(seed));
    run.report.notes.push_back("stop=" + run.log.stop_reason);
    run.report.notes.push_back("best_epoch=" +
                               std::to_string(run.log.best_epoch));
    result.runs.push_back(std::move(run));
  }
  FinalizeProtocolResult(&result);
  return result;
}

std::string ProtocolResult::SummaryTsv() const {
  std::ostringstream os;
  if (runs.empty()) throw DataError("protocol summary: no runs");
  os << "# model=" << runs.front().report.model
     << "\tsplit=" << runs.front().report.split
     << "\tpriors=" << runs.front().report.priors
     << "\truns=" << runs.size() << '\n';
  os << "metric\tmean\tstd\n";
  if (has_rmse) os << "rmse\t" << Fmt6(mean_rmse) << '\t' << Fmt6(std_rmse)
                   << '\n';
  os << "r\t" << Fmt6(mean_r) << '\t' << Fmt6(std_r) << '\n';
  os << "seed\tavg_rmse\tavg_r\tbest_epoch\tstop\n";
  for (const ProtocolRun &run : runs) {
    os << run.seed << '\t'
       << (run.report.has_avg_rmse ? Fmt6(run.report.avg_rmse) : "") << '\t'
       << (run.report.has_avg_r ? Fmt6(run.report.avg_r) : "") << '\t'
       << run.log.best_epoch << '\t' << run.log.stop_reason << '\n';
  }
  // Per-feature means across seeds.
  const std::vector<FeatureScore> &first = runs.front().report.headline;
  os << "feature\trmse_mean\trmse_std\tr_mean\tr_std\n";
  for (size_t j = 0; j < first.size(); ++j) {
    std::vector<double> rmses, rs;
    for (const ProtocolRun &run : runs) {
      const FeatureScore &fs = run.report.headline.at(j);
      if (fs.has_rmse) rmses.push_back(fs.rmse);
      if (fs.has_r) rs.push_back(fs.r);
    }
    double rm, rsd, m, sd;
    MeanAndStd(rmses, &rm, &rsd);
    MeanAndStd(rs, &m, &sd);
    os << first[j].name << '\t' << (rmses.empty() ? "" : Fmt6(rm)) << '\t'
       << (rmses.empty() ? "" : Fmt6(rsd)) << '\t'
       << (rs.empty() ? "" : Fmt6(m)) << '\t' << (rs.empty() ? "" : Fmt6(sd))
       << '\n';
  }
  return os.str();
}

void ProtocolResult::SaveSummary(const std::string &path) const {
  WriteTextFile(path, SummaryTsv());
}

void EmitPlotData(const Tensor &measured, const Tensor &prior,
                  const Tensor &reconstructed,
                  const std::vector<std::string> &feature_names,
                  const std::string &out_path) {
  if (!measured.SameShape(prior) || !measured.SameShape(reconstructed))
    throw DataError("plot data: sequences must share one shape");
  if (measured.Cols() != static_cast<int>(feature_names.size()))
    throw DataError("plot data: " + std::to_string(feature_names.size()) +
                    " names for " + std::to_string(measured.Cols()) +
                    " features");
  std::ostringstream os;
  os << "frame";
  for (const std::string &name : feature_names)
    os << '\t' << name << "_meas\t" << name << "_prior\t" << name << "_recon";
  os << '\n';
  char buf[100];
  for (int t = 0; t < measured.Rows(); ++t) {
    os << t;
    for (int j = 0; j < measured.Cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "\t%.17g\t%.17g\t%.17g",
                    measured.At(t, j), prior.At(t, j), reconstructed.At(t, j));
      os << buf;
    }
    os << '\n';
  }
  WriteTextFile(out_path, os.str());
}

}  // namespace artic
