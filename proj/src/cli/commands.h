// cli/commands.h

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

#ifndef ARTIC_CLI_COMMANDS_H_
#define ARTIC_CLI_COMMANDS_H_

#include <string>
#include <vector>

#include "cli/experiment-config.h"
#include "data/synth-corpus.h"

namespace artic {

// Every command throws ConfigError / DataError / NumericError; the binary
// maps those to exit codes.  Results go to files, progress to stderr.

// Runs the acoustic front end over every `.wav` entry and writes feature
// files plus a rewritten manifest into out_dir.  Non-wav entries are
// referenced unchanged.
struct ExtractArgs {
  std::string manifest;
  std::string out_dir;
};
void CmdExtract(const ExtractArgs &args);

// Builds a statistical prior table from measured articulation: per-phone
// means of the per-speaker z-normalized VTVs, rounded to integers, seeded
// by the expert table's phone set and non-VTV flags.
struct PriorsArgs {
  std::string manifest;
  std::string lf_table;
  std::string out;
  std::vector<std::string> speakers;  // empty: every speaker
  std::string provenance = "SF";
};
void CmdPriors(const PriorsArgs &args);

// Generates the synthetic corpus.
void CmdSynth(const SynthConfig &config);

// Trains one model (the first configured seed) and writes
// <out_prefix>.ckpt, <out_prefix>.log.tsv, and <out_prefix>.cfg.
struct TrainArgs {
  ExperimentConfig config;
  std::string manifest;
  std::string lf_table;          // optional
  std::string sf_table;          // optional; derived from train data if needed
  std::string split_plan;        // optional; matched split made when empty
  std::string out_prefix;
};
void CmdTrain(const TrainArgs &args);

// Scores a trained checkpoint on the split's test speakers.
struct EvalArgs {
  ExperimentConfig config;
  std::string manifest;
  std::string lf_table;
  std::string sf_table;
  std::string split_plan;
  std::string checkpoint;
  std::string out;
};
void CmdEval(const EvalArgs &args);

// Supervised grid: every input configuration x {PT, VTV} targets, mean
// over the configured seeds, one TSV.
struct Table1Args {
  ExperimentConfig config;  // scale/trainer/seeds/split base; model forced
  std::string manifest;
  std::string lf_table;
  std::string sf_table;  // optional; derived when empty
  std::string out;
  std::string s1_speaker;  // optional single-speaker acoustic row
};
void CmdTable1(const Table1Args &args);

// Weakly supervised grid: {LF, SF, SF1, SF2} priors x {Baseline, ResDNN,
// AE1, AE2}, mean over the configured seeds, one TSV.  LF rows carry no
// RMSE.  SF1/SF2 default to the alphabetically first one/two train
// speakers.
struct Table2Args {
  ExperimentConfig config;
  std::string manifest;
  std::string lf_table;
  std::string out;
  std::string sf1_speaker;
  std::vector<std::string> sf2_speakers;
};
void CmdTable2(const Table2Args &args);

// Measured / prior / reconstructed time series for one utterance of a
// weakly supervised checkpoint.
struct PlotDataArgs {
  ExperimentConfig config;
  std::string manifest;
  std::string lf_table;
  std::string sf_table;
  std::string checkpoint;
  std::string utt;  // "<speaker>-<utt id>" or a bare utt id
  std::string out;
};
void CmdPlotData(const PlotDataArgs &args);

}  // namespace artic

#endif  // ARTIC_CLI_COMMANDS_H_
