// tools/artic-main.cc

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

// artic: acoustic-to-articulatory inversion toolkit.
//
// Subcommands cover the full pipeline: feature extraction, prior-table
// derivation, synthetic corpora, training, scoring, the two summary
// tables, and figure-style trajectory dumps.  Results go to files; logs
// go to stderr.  Exit codes: 0 ok, 1 bad configuration, 2 bad data,
// 3 numeric failure.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "base/error.h"
#include "cli/commands.h"
#include "cli/experiment-config.h"
#include "data/synth-corpus.h"

namespace {

artic::ExperimentConfig LoadConfig(const std::string &path,
                                   const std::vector<std::string> &overrides) {
  artic::ExperimentConfig cfg;
  if (!path.empty()) cfg = artic::ExperimentConfig::Load(path);
  for (const std::string &kv : overrides) cfg.ApplyOverride(kv);
  cfg.Validate();
  return cfg;
}

// Attaches --config and repeatable --set k=v to an experiment subcommand.
void AddConfigOptions(CLI::App *cmd, std::string *config_path,
                      std::vector<std::string> *overrides) {
  cmd->add_option("--config", *config_path,
                  "experiment config file (key = value lines)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--set", *overrides,
                  "override one config key, e.g. --set model=ae2");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"acoustic-to-articulatory inversion toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "artic 0.1.0");

  // extract ----------------------------------------------------------------
  artic::ExtractArgs extract;
  CLI::App *c_extract =
      app.add_subcommand("extract", "convert waveforms to acoustic features");
  c_extract->add_option("--manifest", extract.manifest)
      ->required()
      ->check(CLI::ExistingFile);
  c_extract->add_option("--out-dir", extract.out_dir)->required();

  // priors -----------------------------------------------------------------
  artic::PriorsArgs priors;
  CLI::App *c_priors = app.add_subcommand(
      "priors", "derive a statistical prior table from measured tracks");
  c_priors->add_option("--manifest", priors.manifest)
      ->required()
      ->check(CLI::ExistingFile);
  c_priors->add_option("--lf-table", priors.lf_table)
      ->required()
      ->check(CLI::ExistingFile);
  c_priors->add_option("--out", priors.out)->required();
  c_priors->add_option("--speakers", priors.speakers,
                       "restrict to these speakers (default: all)");
  c_priors->add_option("--provenance", priors.provenance,
                       "label for the derived table (SF, SF1, SF2, ...)");

  // synth ------------------------------------------------------------------
  artic::SynthConfig synth;
  CLI::App *c_synth =
      app.add_subcommand("synth", "generate a synthetic aligned corpus");
  c_synth->add_option("--out-dir", synth.out_dir)->required();
  c_synth->add_option("--speakers", synth.num_speakers);
  c_synth->add_option("--utts", synth.num_utts, "utterances per speaker");
  c_synth->add_option("--phones", synth.num_phones);
  c_synth->add_option("--seed", synth.seed);
  c_synth->add_option("--noise-sigma", synth.noise_sigma);
  c_synth->add_option("--segments", synth.segments_per_utt);

  // train ------------------------------------------------------------------
  artic::TrainArgs train;
  std::string train_cfg_path;
  std::vector<std::string> train_sets;
  CLI::App *c_train = app.add_subcommand("train", "train one model");
  AddConfigOptions(c_train, &train_cfg_path, &train_sets);
  c_train->add_option("--manifest", train.manifest)
      ->required()
      ->check(CLI::ExistingFile);
  c_train->add_option("--lf-table", train.lf_table)->check(CLI::ExistingFile);
  c_train->add_option("--sf-table", train.sf_table)->check(CLI::ExistingFile);
  c_train->add_option("--split", train.split_plan, "split plan file")
      ->check(CLI::ExistingFile);
  c_train->add_option("--out-prefix", train.out_prefix)->required();

  // eval -------------------------------------------------------------------
  artic::EvalArgs eval;
  std::string eval_cfg_path;
  std::vector<std::string> eval_sets;
  CLI::App *c_eval =
      app.add_subcommand("eval", "score a checkpoint on the test speakers");
  AddConfigOptions(c_eval, &eval_cfg_path, &eval_sets);
  c_eval->add_option("--manifest", eval.manifest)
      ->required()
      ->check(CLI::ExistingFile);
  c_eval->add_option("--lf-table", eval.lf_table)->check(CLI::ExistingFile);
  c_eval->add_option("--sf-table", eval.sf_table)->check(CLI::ExistingFile);
  c_eval->add_option("--split", eval.split_plan)->check(CLI::ExistingFile);
  c_eval->add_option("--checkpoint", eval.checkpoint)
      ->required()
      ->check(CLI::ExistingFile);
  c_eval->add_option("--out", eval.out)->required();

  // table1 -----------------------------------------------------------------
  artic::Table1Args table1;
  std::string t1_cfg_path;
  std::vector<std::string> t1_sets;
  CLI::App *c_table1 = app.add_subcommand(
      "table1", "sequence-model input sweep over both target sets");
  AddConfigOptions(c_table1, &t1_cfg_path, &t1_sets);
  c_table1->add_option("--manifest", table1.manifest)
      ->required()
      ->check(CLI::ExistingFile);
  c_table1->add_option("--lf-table", table1.lf_table)
      ->required()
      ->check(CLI::ExistingFile);
  c_table1->add_option("--sf-table", table1.sf_table)
      ->check(CLI::ExistingFile);
  c_table1->add_option("--out", table1.out)->required();
  c_table1->add_option("--s1", table1.s1_speaker,
                       "add a single-speaker acoustic row for this speaker");

  // table2 -----------------------------------------------------------------
  artic::Table2Args table2;
  std::string t2_cfg_path;
  std::vector<std::string> t2_sets;
  CLI::App *c_table2 = app.add_subcommand(
      "table2", "weak-supervision grid over prior-table provenances");
  AddConfigOptions(c_table2, &t2_cfg_path, &t2_sets);
  c_table2->add_option("--manifest", table2.manifest)
      ->required()
      ->check(CLI::ExistingFile);
  c_table2->add_option("--lf-table", table2.lf_table)
      ->required()
      ->check(CLI::ExistingFile);
  c_table2->add_option("--out", table2.out)->required();
  c_table2->add_option("--sf1", table2.sf1_speaker,
                       "speaker for the single-speaker statistical table");
  c_table2->add_option("--sf2", table2.sf2_speakers,
                       "speakers for the two-speaker statistical table");

  // plot-data --------------------------------------------------------------
  artic::PlotDataArgs plot;
  std::string plot_cfg_path;
  std::vector<std::string> plot_sets;
  CLI::App *c_plot = app.add_subcommand(
      "plot-data", "dump measured/prior/reconstructed trajectories");
  AddConfigOptions(c_plot, &plot_cfg_path, &plot_sets);
  c_plot->add_option("--manifest", plot.manifest)
      ->required()
      ->check(CLI::ExistingFile);
  c_plot->add_option("--lf-table", plot.lf_table)->check(CLI::ExistingFile);
  c_plot->add_option("--sf-table", plot.sf_table)->check(CLI::ExistingFile);
  c_plot->add_option("--checkpoint", plot.checkpoint)
      ->required()
      ->check(CLI::ExistingFile);
  c_plot->add_option("--utt", plot.utt, "<speaker>-<utt> or a unique utt id")
      ->required();
  c_plot->add_option("--out", plot.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_extract->parsed()) {
      artic::CmdExtract(extract);
    } else if (c_priors->parsed()) {
      artic::CmdPriors(priors);
    } else if (c_synth->parsed()) {
      artic::CmdSynth(synth);
    } else if (c_train->parsed()) {
      train.config = LoadConfig(train_cfg_path, train_sets);
      artic::CmdTrain(train);
    } else if (c_eval->parsed()) {
      eval.config = LoadConfig(eval_cfg_path, eval_sets);
      artic::CmdEval(eval);
    } else if (c_table1->parsed()) {
      table1.config = LoadConfig(t1_cfg_path, t1_sets);
      artic::CmdTable1(table1);
    } else if (c_table2->parsed()) {
      table2.config = LoadConfig(t2_cfg_path, t2_sets);
      artic::CmdTable2(table2);
    } else if (c_plot->parsed()) {
      plot.config = LoadConfig(plot_cfg_path, plot_sets);
      artic::CmdPlotData(plot);
    }
  } catch (const artic::ConfigError &e) {
    std::cerr << "[artic] config error: " << e.what() << '\n';
    return 1;
  } catch (const artic::DataError &e) {
    std::cerr << "[artic] data error: " << e.what() << '\n';
    return 2;
  } catch (const artic::NumericError &e) {
    std::cerr << "[artic] numeric error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception &e) {
    std::cerr << "[artic] error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
