// cli/experiment-config.h

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

#ifndef ARTIC_CLI_EXPERIMENT_CONFIG_H_
#define ARTIC_CLI_EXPERIMENT_CONFIG_H_

#include <cstdint>
#include <string>
#include <vector>

#include "data/split.h"
#include "eval/protocol.h"

namespace artic {

// Plain-text experiment description: `key = value` lines, `#` comments.
// Every default is the published configuration; `scale = desk` switches
// the layer widths to sizes that train in minutes on one core.  Explicit
// width keys win over the scale presets.
struct ExperimentConfig {
  std::string model = "blstm";
  std::string input = "mfcc";
  std::string priors = "SF";
  std::string target = "vtv";
  std::string split = "matched";
  std::string scale = "paper";
  std::vector<uint64_t> seeds = {1, 2};
  uint64_t split_seed = 1;
  int train_count = -1, valid_count = -1, test_count = -1;

  int context = 12;
  double lambda_z = 2.0;
  double lambda_x = 0.5;
  double lambda_w = 0.01;
  std::string residual = "scalar";  // or "per-component"
  bool ae2_average = false;

  // Empty/zero: use the scale preset.
  std::vector<int> encoder_widths;
  std::vector<int> trunk_widths;
  int blstm_layers = 0;
  int blstm_hidden = 0;

  int max_epochs = 50;
  int batch_size = 128;
  int patience = 2;
  double holdout_fraction = 0.1;
  std::string optimizer = "default";  // default | adam | sgd-exp
  double learning_rate = 0.0;         // 0: family default
  double clip_norm = 0.0;
  int decay_every = 10000;
  double decay_rate = 0.96;

  static ExperimentConfig Load(const std::string &path);

  // Applies one `key = value` override; unknown keys raise ConfigError.
  void Apply(const std::string &key, const std::string &value);
  void ApplyLine(const std::string &line);        // may be empty/comment
  void ApplyOverride(const std::string &kv);      // "key=value"

  // Canonical serialization: every key, one per line, current values.
  std::string Serialize() const;

  // Basic cross-field checks; called by Resolve.
  void Validate() const;

  SplitKind ResolveSplitKind() const;
  ModelKind ResolveModelKind() const;

  // Fully resolved experiment (scale presets applied, optimizer chosen).
  RunSpec Resolve() const;
};

}  // namespace artic

#endif  // ARTIC_CLI_EXPERIMENT_CONFIG_H_
