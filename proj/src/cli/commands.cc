// cli/commands.cc

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

#include "cli/commands.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <sstream>

#include "base/error.h"
#include "base/io.h"
#include "data/corpus.h"
#include "feat/feature-file.h"
#include "feat/mfcc.h"
#include "feat/wav.h"
#include "model/autoencoder.h"
#include "vtv/vtv-extract.h"

namespace artic {

namespace {

std::string Fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

bool EndsWith(const std::string &s, const std::string &suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Owns loaded and derived prior tables behind the lookup-by-provenance map.
struct TableSet {
  std::vector<std::unique_ptr<PriorTable>> owned;
  PriorTables tables;

  void Adopt(PriorTable table) {
    owned.push_back(std::make_unique<PriorTable>(std::move(table)));
    tables.Put(owned.back().get());
  }
  bool Has(const std::string &name) const {
    return tables.Find(name) != nullptr;
  }
};

// Statistical table over the given speakers' measured VTVs (already
// per-speaker z-normalized by the corpus loader).
PriorTable DeriveStatTable(const Corpus &corpus,
                           const std::vector<std::string> &speakers,
                           const PriorTable &seed,
                           const std::string &provenance) {
  std::vector<const Tensor *> tracks;
  std::vector<const std::vector<std::string> *> phones;
  for (int idx : corpus.UttsOfSpeakers(speakers)) {
    const AlignedUtterance &utt = corpus.utts.at(idx);
    if (!utt.has_artic)
      throw DataError("prior derivation: " + utt.speaker + "-" + utt.utt_id +
                      " has no articulatory track");
    if (utt.artic.Cols() != kNumVtvs)
      throw DataError("prior derivation needs VTV targets, got dim " +
                      std::to_string(utt.artic.Cols()));
    tracks.push_back(&utt.artic);
    phones.push_back(&utt.frame_phones);
  }
  if (tracks.empty())
    throw DataError("prior derivation: no utterances for the given speakers");
  return ComputeStatisticalPriors(tracks, phones, seed, provenance);
}

SplitPlan ResolvePlan(const std::string &split_path,
                      const DatasetManifest &manifest,
                      const ExperimentConfig &cfg) {
  if (!split_path.empty()) return SplitPlan::Load(split_path);
  return MakeSplit(manifest, cfg.ResolveSplitKind(), cfg.split_seed,
                   cfg.train_count, cfg.valid_count, cfg.test_count);
}

// Labels of the prior tables one resolved run needs.
std::vector<std::string> NeededTables(const RunSpec &spec) {
  std::vector<std::string> needed;
  if (spec.model == ModelKind::kBlstm) {
    switch (spec.input) {
      case InputKind::kLf:
      case InputKind::kMfccLf: needed.push_back("LF"); break;
      case InputKind::kSf:
      case InputKind::kMfccSf: needed.push_back("SF"); break;
      default: break;
    }
  } else {
    needed.push_back(spec.priors);
  }
  return needed;
}

// Loads the given table files and checks that every needed provenance is
// present or derivable (statistical labels with an expert seed table and
// measured tracks in the manifest).  Derivation happens after the corpus
// loads; this runs before any heavy work.
void CheckTablePlan(const TableSet &set,
                    const std::vector<std::string> &needed,
                    bool manifest_has_artic) {
  for (const std::string &name : needed) {
    if (set.Has(name)) continue;
    const bool statistical = name.rfind("SF", 0) == 0;
    if (statistical && set.Has("LF") && manifest_has_artic) continue;
    throw ConfigError("prior table " + name +
                      " is neither supplied nor derivable");
  }
}

void DeriveMissing(TableSet *set, const std::vector<std::string> &needed,
                   const Corpus &corpus, const SplitPlan &plan) {
  for (const std::string &name : needed) {
    if (set->Has(name)) continue;
    std::cerr << "[artic] deriving " << name
              << " table from the train speakers\n";
    set->Adopt(DeriveStatTable(corpus, plan.train,
                               set->tables.Require("LF"), name));
  }
}

TableSet LoadTables(const std::string &lf_path, const std::string &sf_path) {
  TableSet set;
  if (!lf_path.empty()) set.Adopt(PriorTable::Load(lf_path));
  if (!sf_path.empty()) set.Adopt(PriorTable::Load(sf_path));
  return set;
}

bool ManifestHasArtic(const DatasetManifest &manifest) {
  for (const UtteranceEntry &e : manifest.entries)
    if (e.artic_path.empty()) return false;
  return !manifest.entries.empty();
}

Tensor VtvSlice(const Tensor &wide) {
  if (wide.Cols() < kNumVtvs)
    throw DataError("expected at least " + std::to_string(kNumVtvs) +
                    " columns, got " + std::to_string(wide.Cols()));
  Tensor out({wide.Rows(), kNumVtvs});
  for (int t = 0; t < wide.Rows(); ++t)
    for (int j = 0; j < kNumVtvs; ++j) out.At(t, j) = wide.At(t, j);
  return out;
}

void SaveTrainLog(const std::string &path, const TrainLog &log) {
  std::ostringstream os;
  os << "epoch\ttrain_loss\tmonitor\n";
  for (size_t e = 0; e < log.train_loss.size(); ++e)
    os << e + 1 << '\t' << Fmt6(log.train_loss[e]) << '\t'
       << Fmt6(log.monitor[e]) << '\n';
  os << "# best_epoch=" << log.best_epoch << "\tstop=" << log.stop_reason
     << '\n';
  WriteTextFile(path, os.str());
}

std::string JoinNames(const std::vector<uint64_t> &seeds) {
  std::string out;
  for (size_t i = 0; i < seeds.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(seeds[i]);
  }
  return out;
}

// Mean-over-seeds cells for one table entry.
struct Cells {
  std::string rmse, r;
};

Cells CellsOf(const ProtocolResult &result) {
  Cells c;
  if (result.has_rmse) c.rmse = Fmt6(result.mean_rmse);
  c.r = Fmt6(result.mean_r);
  return c;
}

Cells CellsOf(const ScoreReport &report) {
  Cells c;
  if (report.has_avg_rmse) c.rmse = Fmt6(report.avg_rmse);
  if (report.has_avg_r) c.r = Fmt6(report.avg_r);
  return c;
}

}  // namespace

void CmdExtract(const ExtractArgs &args) {
  DatasetManifest manifest = LoadManifest(args.manifest);
  MakeDirs(args.out_dir);
  DatasetManifest rewritten;
  MfccConfig mfcc_cfg;
  int converted = 0;
  for (const UtteranceEntry &e : manifest.entries) {
    UtteranceEntry out = e;
    out.align_path = std::filesystem::absolute(e.align_path).string();
    if (!e.artic_path.empty())
      out.artic_path = std::filesystem::absolute(e.artic_path).string();
    if (EndsWith(e.audio_path, ".wav")) {
      WavData wav = ReadWav(e.audio_path);
      Tensor mfcc = ComputeMfcc(wav.samples, wav.sample_rate, mfcc_cfg);
      Tensor feats = AppendDeltas(mfcc, mfcc_cfg.delta_window);
      const std::string feat_path =
          args.out_dir + "/" + e.speaker + "-" + e.utt_id + ".afea";
      WriteFeatureFile(feat_path, feats);
      out.audio_path = std::filesystem::absolute(feat_path).string();
      ++converted;
    } else {
      out.audio_path = std::filesystem::absolute(e.audio_path).string();
    }
    rewritten.entries.push_back(std::move(out));
  }
  SaveManifest(args.out_dir + "/manifest.txt", rewritten);
  std::cerr << "[artic] extract: " << converted << " of "
            << manifest.entries.size() << " utterances converted, manifest "
            << args.out_dir << "/manifest.txt\n";
}

void CmdPriors(const PriorsArgs &args) {
  PriorTable seed = PriorTable::Load(args.lf_table);
  DatasetManifest manifest = LoadManifest(args.manifest);
  CorpusOptions opts;
  opts.target = TargetKind::kVtv;
  Corpus corpus = LoadCorpus(manifest, opts);
  std::vector<std::string> speakers =
      args.speakers.empty() ? manifest.Speakers() : args.speakers;
  PriorTable table =
      DeriveStatTable(corpus, speakers, seed, args.provenance);
  table.Save(args.out);
  std::cerr << "[artic] priors: wrote " << table.NumPhones() << "-phone "
            << args.provenance << " table to " << args.out << '\n';
}

void CmdSynth(const SynthConfig &config) {
  SynthPaths paths = GenerateSynthCorpus(config);
  std::cerr << "[artic] synth: corpus in " << config.out_dir << '\n'
            << "[artic]   pellet manifest: " << paths.manifest_pt << '\n'
            << "[artic]   vtv manifest:    " << paths.manifest_vtv << '\n'
            << "[artic]   expert table:    " << paths.lf_table << '\n';
}

void CmdTrain(const TrainArgs &args) {
  const RunSpec spec = args.config.Resolve();
  TableSet set = LoadTables(args.lf_table, args.sf_table);
  DatasetManifest manifest = LoadManifest(args.manifest);
  const std::vector<std::string> needed = NeededTables(spec);
  CheckTablePlan(set, needed, ManifestHasArtic(manifest));

  SplitPlan plan = ResolvePlan(args.split_plan, manifest, args.config);
  CorpusOptions opts;
  opts.target = ParseTargetKind(args.config.target);
  Corpus corpus = LoadCorpus(manifest, opts);
  DeriveMissing(&set, needed, corpus, plan);

  const uint64_t seed = spec.seeds.front();
  std::cerr << "[artic] train: " << args.config.model << " seed " << seed
            << ", " << plan.train.size() << " train / " << plan.valid.size()
            << " valid speakers\n";
  TrainedModel trained = TrainOnce(corpus, plan, spec, set.tables, seed);
  trained.Params().Save(args.out_prefix + ".ckpt");
  SaveTrainLog(args.out_prefix + ".log.tsv", trained.log);
  WriteTextFile(args.out_prefix + ".cfg", args.config.Serialize());
  std::cerr << "[artic] train: stop=" << trained.log.stop_reason
            << " best_epoch=" << trained.log.best_epoch << " checkpoint "
            << args.out_prefix << ".ckpt\n";
}

void CmdEval(const EvalArgs &args) {
  const RunSpec spec = args.config.Resolve();
  TableSet set = LoadTables(args.lf_table, args.sf_table);
  DatasetManifest manifest = LoadManifest(args.manifest);
  const std::vector<std::string> needed = NeededTables(spec);
  CheckTablePlan(set, needed, ManifestHasArtic(manifest));

  SplitPlan plan = ResolvePlan(args.split_plan, manifest, args.config);
  CorpusOptions opts;
  opts.target = ParseTargetKind(args.config.target);
  Corpus corpus = LoadCorpus(manifest, opts);
  DeriveMissing(&set, needed, corpus, plan);

  const std::vector<int> test_idx = corpus.UttsOfSpeakers(plan.test);
  if (test_idx.empty()) throw ConfigError("eval: empty test set");

  ScoreReport report;
  if (spec.model == ModelKind::kBlstm) {
    const std::vector<std::string> inventory =
        PhoneInventory(corpus, set.tables.Find("LF"));
    const AlignedUtterance &first = corpus.utts.at(test_idx.front());
    BlstmConfig bcfg;
    bcfg.input_dim =
        AssembleInput(first, spec.input, set.tables, inventory).Cols();
    bcfg.output_dim = first.artic.Cols();
    bcfg.num_layers = spec.blstm_layers;
    bcfg.hidden = spec.blstm_hidden;
    BlstmModel model(bcfg, /*seed=*/1);
    model.LoadParams(args.checkpoint);
    report = ScoreBlstmModel(model, spec, corpus, test_idx, set.tables,
                             inventory);
  } else {
    const PriorTable &table = set.tables.Require(spec.priors);
    std::vector<AlignedUtterance> test = WithPriors(corpus, test_idx, table);
    std::unique_ptr<WindowModel> model = BuildWeakModel(
        spec, test.front().acoustics.Cols(), /*seed=*/1);
    model->LoadParams(args.checkpoint);
    report = ScoreWeakModel(*model, spec, test);
  }
  report.split = SplitKindName(plan.kind);
  report.Save(args.out);
  std::cerr << "[artic] eval: avg r "
            << (report.has_avg_r ? Fmt6(report.avg_r) : "undefined")
            << " over " << test_idx.size() << " utterances -> " << args.out
            << '\n';
}

void CmdTable1(const Table1Args &args) {
  ExperimentConfig cfg = args.config;
  cfg.model = "blstm";
  cfg.Validate();
  if (args.lf_table.empty()) throw ConfigError("table1 needs an expert table");

  DatasetManifest manifest = LoadManifest(args.manifest);
  SplitPlan plan = ResolvePlan("", manifest, cfg);
  TableSet set = LoadTables(args.lf_table, args.sf_table);

  CorpusOptions pt_opts, vtv_opts;
  pt_opts.target = TargetKind::kPellets;
  vtv_opts.target = TargetKind::kVtv;
  std::cerr << "[artic] table1: loading corpora\n";
  Corpus corpus_pt = LoadCorpus(manifest, pt_opts);
  Corpus corpus_vtv = LoadCorpus(manifest, vtv_opts);
  DeriveMissing(&set, {"SF"}, corpus_vtv, plan);

  const std::vector<InputKind> kinds = {
      InputKind::kMfcc,      InputKind::kPhones, InputKind::kLf,
      InputKind::kSf,        InputKind::kMfccPhones,
      InputKind::kMfccLf,    InputKind::kMfccSf,
  };
  std::ostringstream os;
  os << "# table1\tsplit=" << SplitKindName(plan.kind)
     << "\tseeds=" << JoinNames(cfg.seeds) << "\tscale=" << cfg.scale;
  if (!args.s1_speaker.empty()) os << "\ts1=" << args.s1_speaker;
  os << '\n';
  os << "input\tpt_rmse\tpt_r\tvtv_rmse\tvtv_r\n";

  RunSpec base = cfg.Resolve();
  auto run_row = [&](const RunSpec &spec, const std::string &label) {
    std::cerr << "[artic] table1: " << label << '\n';
    Cells pt = CellsOf(RunProtocol(corpus_pt, plan, spec, set.tables));
    Cells vtv = CellsOf(RunProtocol(corpus_vtv, plan, spec, set.tables));
    os << label << '\t' << pt.rmse << '\t' << pt.r << '\t' << vtv.rmse << '\t'
       << vtv.r << '\n';
  };
  for (InputKind kind : kinds) {
    RunSpec spec = base;
    spec.input = kind;
    run_row(spec, InputKindName(kind));
  }
  if (!args.s1_speaker.empty()) {
    RunSpec spec = base;
    spec.input = InputKind::kMfcc;
    spec.train_speakers = {args.s1_speaker};
    run_row(spec, "mfcc(s1)");
  }
  WriteTextFile(args.out, os.str());
  std::cerr << "[artic] table1 -> " << args.out << '\n';
}

void CmdTable2(const Table2Args &args) {
  ExperimentConfig cfg = args.config;
  cfg.Validate();
  if (args.lf_table.empty()) throw ConfigError("table2 needs an expert table");

  DatasetManifest manifest = LoadManifest(args.manifest);
  if (!ManifestHasArtic(manifest))
    throw ConfigError("table2 needs measured articulatory tracks");
  SplitPlan plan = ResolvePlan("", manifest, cfg);
  TableSet set = LoadTables(args.lf_table, "");

  CorpusOptions opts;
  opts.target = TargetKind::kVtv;
  std::cerr << "[artic] table2: loading corpus\n";
  Corpus corpus = LoadCorpus(manifest, opts);

  std::vector<std::string> train_sorted = plan.train;
  std::sort(train_sorted.begin(), train_sorted.end());
  if (train_sorted.empty()) throw ConfigError("table2: empty train set");
  const std::string sf1 =
      args.sf1_speaker.empty() ? train_sorted.front() : args.sf1_speaker;
  std::vector<std::string> sf2 = args.sf2_speakers;
  if (sf2.empty()) {
    sf2.push_back(train_sorted.front());
    if (train_sorted.size() > 1) sf2.push_back(train_sorted[1]);
  }

  const PriorTable &lf = set.tables.Require("LF");
  set.Adopt(DeriveStatTable(corpus, plan.train, lf, "SF"));
  set.Adopt(DeriveStatTable(corpus, {sf1}, lf, "SF1"));
  set.Adopt(DeriveStatTable(corpus, sf2, lf, "SF2"));

  const std::vector<int> test_idx = corpus.UttsOfSpeakers(plan.test);
  if (test_idx.empty()) throw ConfigError("table2: empty test set");

  std::ostringstream os;
  os << "# table2\tsplit=" << SplitKindName(plan.kind)
     << "\tseeds=" << JoinNames(cfg.seeds) << "\tscale=" << cfg.scale
     << "\tsf1=" << sf1 << '\n';
  os << "priors\tbaseline_rmse\tbaseline_r\tresdnn_rmse\tresdnn_r"
     << "\tae1_rmse\tae1_r\tae2_rmse\tae2_r\n";

  RunSpec base = cfg.Resolve();
  for (const std::string &prov : {"LF", "SF", "SF1", "SF2"}) {
    const PriorTable &table = set.tables.Require(prov);
    std::cerr << "[artic] table2: " << prov << " row\n";
    Cells baseline = CellsOf(ScoreBaseline(corpus, test_idx, table));
    os << prov << '\t' << baseline.rmse << '\t' << baseline.r;
    for (ModelKind kind :
         {ModelKind::kResDnn, ModelKind::kAe1, ModelKind::kAe2}) {
      RunSpec spec = base;
      spec.model = kind;
      spec.priors = prov;
      Cells cells = CellsOf(RunProtocol(corpus, plan, spec, set.tables));
      os << '\t' << cells.rmse << '\t' << cells.r;
    }
    os << '\n';
  }
  WriteTextFile(args.out, os.str());
  std::cerr << "[artic] table2 -> " << args.out << '\n';
}

void CmdPlotData(const PlotDataArgs &args) {
  const RunSpec spec = args.config.Resolve();
  if (spec.model == ModelKind::kBlstm)
    throw ConfigError(
        "plot-data renders weakly supervised reconstructions; pick a weak "
        "model in the config");
  TableSet set = LoadTables(args.lf_table, args.sf_table);
  DatasetManifest manifest = LoadManifest(args.manifest);
  const std::vector<std::string> needed = NeededTables(spec);
  CheckTablePlan(set, needed, ManifestHasArtic(manifest));

  SplitPlan plan = ResolvePlan("", manifest, args.config);
  CorpusOptions opts;
  opts.target = TargetKind::kVtv;
  Corpus corpus = LoadCorpus(manifest, opts);
  DeriveMissing(&set, needed, corpus, plan);

  // "<speaker>-<utt>" exact key, or a bare utterance id if unique.
  int found = -1;
  for (size_t i = 0; i < corpus.utts.size(); ++i) {
    const AlignedUtterance &utt = corpus.utts[i];
    if (utt.speaker + "-" + utt.utt_id == args.utt || utt.utt_id == args.utt) {
      if (found >= 0)
        throw ConfigError("utterance id " + args.utt +
                          " is ambiguous; use <speaker>-<utt>");
      found = static_cast<int>(i);
    }
  }
  if (found < 0) throw DataError("utterance not found: " + args.utt);
  const AlignedUtterance &raw = corpus.utts[found];
  if (!raw.has_artic)
    throw DataError("utterance has no measured articulation: " + args.utt);

  const PriorTable &table = set.tables.Require(spec.priors);
  AlignedUtterance utt = raw;
  utt.priors = PriorsForFrames(utt.frame_phones, table);
  std::unique_ptr<WindowModel> model =
      BuildWeakModel(spec, utt.acoustics.Cols(), /*seed=*/1);
  model->LoadParams(args.checkpoint);
  const Ae2Model *ae2 = dynamic_cast<const Ae2Model *>(model.get());
  Tensor gen = (spec.ae2_average_windows && ae2 != nullptr)
                   ? Ae2ReconstructAveraged(*ae2, utt)
                   : GenerateSequence(*model, utt);
  std::vector<std::string> names(kVtvNames, kVtvNames + kNumVtvs);
  EmitPlotData(utt.artic, VtvSlice(utt.priors), VtvSlice(gen), names,
               args.out);
  std::cerr << "[artic] plot-data: " << utt.speaker << "-" << utt.utt_id
            << " (" << utt.NumFrames() << " frames) -> " << args.out << '\n';
}

}  // namespace artic
