// cli/experiment-config.cc

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

#include "cli/experiment-config.h"

#include <cstdio>
#include <sstream>

#include "base/error.h"
#include "base/io.h"

namespace artic {

namespace {

long ParseIntOr(const std::string &key, const std::string &value) {
  long out = 0;
  if (!ParseInt(value, &out))
    throw ConfigError("config: " + key + " wants an integer, got " + value);
  return out;
}

double ParseDoubleOr(const std::string &key, const std::string &value) {
  double out = 0;
  if (!ParseDouble(value, &out))
    throw ConfigError("config: " + key + " wants a number, got " + value);
  return out;
}

bool ParseBoolOr(const std::string &key, const std::string &value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError("config: " + key + " wants true/false, got " + value);
}

std::vector<int> ParseIntList(const std::string &key,
                              const std::string &value) {
  std::vector<int> out;
  for (const std::string &item : Split(value, ',')) {
    const std::string t = Trim(item);
    if (t.empty()) continue;
    out.push_back(static_cast<int>(ParseIntOr(key, t)));
  }
  return out;
}

std::vector<uint64_t> ParseSeedList(const std::string &key,
                                    const std::string &value) {
  std::vector<uint64_t> out;
  for (const std::string &item : Split(value, ',')) {
    const std::string t = Trim(item);
    if (t.empty()) continue;
    out.push_back(static_cast<uint64_t>(ParseIntOr(key, t)));
  }
  if (out.empty()) throw ConfigError("config: " + key + " needs a value");
  return out;
}

std::string JoinInts(const std::vector<int> &v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string JoinSeeds(const std::vector<uint64_t> &v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string FmtG(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

ExperimentConfig ExperimentConfig::Load(const std::string &path) {
  ExperimentConfig cfg;
  for (const std::string &line : ReadLines(path)) cfg.ApplyLine(line);
  return cfg;
}

void ExperimentConfig::ApplyLine(const std::string &line) {
  std::string body = line;
  const size_t hash = body.find('#');
  if (hash != std::string::npos) body = body.substr(0, hash);
  body = Trim(body);
  if (body.empty()) return;
  const size_t eq = body.find('=');
  if (eq == std::string::npos)
    throw ConfigError("config: expected `key = value`, got: " + line);
  Apply(Trim(body.substr(0, eq)), Trim(body.substr(eq + 1)));
}

void ExperimentConfig::ApplyOverride(const std::string &kv) {
  const size_t eq = kv.find('=');
  if (eq == std::string::npos)
    throw ConfigError("override: expected key=value, got: " + kv);
  Apply(Trim(kv.substr(0, eq)), Trim(kv.substr(eq + 1)));
}

void ExperimentConfig::Apply(const std::string &key,
                             const std::string &value) {
  if (key == "model") model = value;
  else if (key == "input") input = value;
  else if (key == "priors") priors = value;
  else if (key == "target") target = value;
  else if (key == "split") split = value;
  else if (key == "scale") scale = value;
  else if (key == "seeds") seeds = ParseSeedList(key, value);
  else if (key == "split_seed")
    split_seed = static_cast<uint64_t>(ParseIntOr(key, value));
  else if (key == "train_count")
    train_count = static_cast<int>(ParseIntOr(key, value));
  else if (key == "valid_count")
    valid_count = static_cast<int>(ParseIntOr(key, value));
  else if (key == "test_count")
    test_count = static_cast<int>(ParseIntOr(key, value));
  else if (key == "context") context = static_cast<int>(ParseIntOr(key, value));
  else if (key == "lambda_z") lambda_z = ParseDoubleOr(key, value);
  else if (key == "lambda_x") lambda_x = ParseDoubleOr(key, value);
  else if (key == "lambda_w") lambda_w = ParseDoubleOr(key, value);
  else if (key == "residual") residual = value;
  else if (key == "ae2_average") ae2_average = ParseBoolOr(key, value);
  else if (key == "encoder_widths") encoder_widths = ParseIntList(key, value);
  else if (key == "trunk_widths") trunk_widths = ParseIntList(key, value);
  else if (key == "blstm_layers")
    blstm_layers = static_cast<int>(ParseIntOr(key, value));
  else if (key == "blstm_hidden")
    blstm_hidden = static_cast<int>(ParseIntOr(key, value));
  else if (key == "max_epochs")
    max_epochs = static_cast<int>(ParseIntOr(key, value));
  else if (key == "batch_size")
    batch_size = static_cast<int>(ParseIntOr(key, value));
  else if (key == "patience")
    patience = static_cast<int>(ParseIntOr(key, value));
  else if (key == "holdout_fraction") holdout_fraction = ParseDoubleOr(key, value);
  else if (key == "optimizer") optimizer = value;
  else if (key == "learning_rate") learning_rate = ParseDoubleOr(key, value);
  else if (key == "clip_norm") clip_norm = ParseDoubleOr(key, value);
  else if (key == "decay_every")
    decay_every = static_cast<int>(ParseIntOr(key, value));
  else if (key == "decay_rate") decay_rate = ParseDoubleOr(key, value);
  else throw ConfigError("config: unknown key: " + key);
}

std::string ExperimentConfig::Serialize() const {
  std::ostringstream os;
  os << "model = " << model << '\n'
     << "input = " << input << '\n'
     << "priors = " << priors << '\n'
     << "target = " << target << '\n'
     << "split = " << split << '\n'
     << "scale = " << scale << '\n'
     << "seeds = " << JoinSeeds(seeds) << '\n'
     << "split_seed = " << split_seed << '\n'
     << "train_count = " << train_count << '\n'
     << "valid_count = " << valid_count << '\n'
     << "test_count = " << test_count << '\n'
     << "context = " << context << '\n'
     << "lambda_z = " << FmtG(lambda_z) << '\n'
     << "lambda_x = " << FmtG(lambda_x) << '\n'
     << "lambda_w = " << FmtG(lambda_w) << '\n'
     << "residual = " << residual << '\n'
     << "ae2_average = " << (ae2_average ? "true" : "false") << '\n';
  if (!encoder_widths.empty())
    os << "encoder_widths = " << JoinInts(encoder_widths) << '\n';
  if (!trunk_widths.empty())
    os << "trunk_widths = " << JoinInts(trunk_widths) << '\n';
  if (blstm_layers > 0) os << "blstm_layers = " << blstm_layers << '\n';
  if (blstm_hidden > 0) os << "blstm_hidden = " << blstm_hidden << '\n';
  os << "max_epochs = " << max_epochs << '\n'
     << "batch_size = " << batch_size << '\n'
     << "patience = " << patience << '\n'
     << "holdout_fraction = " << FmtG(holdout_fraction) << '\n'
     << "optimizer = " << optimizer << '\n'
     << "learning_rate = " << FmtG(learning_rate) << '\n'
     << "clip_norm = " << FmtG(clip_norm) << '\n'
     << "decay_every = " << decay_every << '\n'
     << "decay_rate = " << FmtG(decay_rate) << '\n';
  return os.str();
}

void ExperimentConfig::Validate() const {
  ParseModelKind(model);
  ParseInputKind(input);
  ParseTargetKind(target);
  ParseSplitKind(split);
  if (scale != "paper" && scale != "desk")
    throw ConfigError("config: scale must be paper or desk, got " + scale);
  if (residual != "scalar" && residual != "per-component")
    throw ConfigError("config: residual must be scalar or per-component");
  if (optimizer != "default" && optimizer != "adam" && optimizer != "sgd-exp")
    throw ConfigError("config: optimizer must be default, adam, or sgd-exp");
  if (seeds.empty()) throw ConfigError("config: seeds must not be empty");
  if (context < 0) throw ConfigError("config: context must be >= 0");
  if (max_epochs < 1) throw ConfigError("config: max_epochs must be >= 1");
  if (batch_size < 1) throw ConfigError("config: batch_size must be >= 1");
  if (priors.empty()) throw ConfigError("config: priors must name a table");
}

SplitKind ExperimentConfig::ResolveSplitKind() const {
  return ParseSplitKind(split);
}

ModelKind ExperimentConfig::ResolveModelKind() const {
  return ParseModelKind(model);
}

RunSpec ExperimentConfig::Resolve() const {
  Validate();
  RunSpec spec;
  spec.model = ParseModelKind(model);
  spec.input = ParseInputKind(input);
  spec.priors = priors;
  spec.context = context;
  spec.lambda_z = lambda_z;
  spec.lambda_x = lambda_x;
  spec.lambda_w = lambda_w;
  spec.residual_per_component = residual == "per-component";
  spec.ae2_average_windows = ae2_average;
  spec.seeds = seeds;

  const bool desk = scale == "desk";
  spec.encoder_widths = !encoder_widths.empty() ? encoder_widths
                        : desk ? std::vector<int>{64, 32}
                               : std::vector<int>{200, 130, 70};
  spec.trunk_widths = !trunk_widths.empty() ? trunk_widths
                      : desk ? std::vector<int>{128, 128}
                             : std::vector<int>{1000, 1000, 1000, 1000};
  spec.blstm_layers = blstm_layers > 0 ? blstm_layers : desk ? 2 : 5;
  spec.blstm_hidden = blstm_hidden > 0 ? blstm_hidden : desk ? 64 : 250;

  spec.trainer.max_epochs = max_epochs;
  spec.trainer.batch_size = batch_size;
  spec.trainer.patience = patience;
  spec.trainer.holdout_fraction = holdout_fraction;
  const bool adam = optimizer == "adam" ||
                    (optimizer == "default" && spec.model == ModelKind::kBlstm);
  spec.trainer.optimizer =
      adam ? OptimizerConfig::Adam() : OptimizerConfig::SgdExpDecay();
  if (learning_rate > 0.0) spec.trainer.optimizer.learning_rate = learning_rate;
  spec.trainer.optimizer.clip_norm = clip_norm;
  spec.trainer.optimizer.decay_every = decay_every;
  spec.trainer.optimizer.decay_rate = decay_rate;
  return spec;
}

}  // namespace artic
