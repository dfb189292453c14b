// grad/param-set.cc

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

#include "grad/param-set.h"

#include <cmath>
#include <fstream>

#include "base/error.h"
#include "base/io.h"
#include "base/rng.h"

namespace artic {

namespace {
constexpr char kMagic[4] = {'A', 'R', 'C', 'N'};
constexpr uint32_t kVersion = 1;
}  // namespace

int ParameterSet::Add(const std::string &name, Tensor init) {
  if (index_.count(name)) throw ConfigError("duplicate parameter name: " + name);
  int idx = static_cast<int>(values_.size());
  grads_.push_back(Tensor::Zeros(init.shape));
  values_.push_back(std::move(init));
  names_.push_back(name);
  index_[name] = idx;
  return idx;
}

bool ParameterSet::Has(const std::string &name) const { return index_.count(name) != 0; }

int ParameterSet::Index(const std::string &name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw ConfigError("unknown parameter: " + name);
  return it->second;
}

void ParameterSet::ZeroGrads() {
  for (Tensor &g : grads_) g.Fill(0.0);
}

int64_t ParameterSet::TotalParams() const {
  int64_t n = 0;
  for (const Tensor &v : values_) n += v.NumEl();
  return n;
}

void ParameterSet::Save(const std::string &path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataError("cannot write checkpoint: " + path);
  os.write(kMagic, 4);
  WriteU32(os, kVersion);
  WriteU64(os, static_cast<uint64_t>(step_count_));
  WriteU32(os, static_cast<uint32_t>(values_.size()));
  for (size_t i = 0; i < values_.size(); ++i) {
    const std::string &name = names_[i];
    WriteU32(os, static_cast<uint32_t>(name.size()));
    os.write(name.data(), static_cast<std::streamsize>(name.size()));
    const Tensor &t = values_[i];
    WriteU32(os, static_cast<uint32_t>(t.shape.size()));
    for (int d : t.shape) WriteU32(os, static_cast<uint32_t>(d));
    for (double v : t.data) WriteF64(os, v);
  }
  if (!os) throw DataError("checkpoint write failed: " + path);
}

ParameterSet ParameterSet::Load(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DataError("cannot open checkpoint: " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::string(magic, 4) != std::string(kMagic, 4))
    throw DataError("bad checkpoint magic in " + path);
  uint32_t version = ReadU32(is);
  if (version != kVersion)
    throw DataError("unsupported checkpoint version " + std::to_string(version));
  ParameterSet ps;
  ps.step_count_ = static_cast<int64_t>(ReadU64(is));
  uint32_t count = ReadU32(is);
  for (uint32_t i = 0; i < count; ++i) {
    uint32_t name_len = ReadU32(is);
    std::string name(name_len, '\0');
    is.read(name.data(), name_len);
    if (!is) throw DataError("truncated checkpoint: " + path);
    uint32_t rank = ReadU32(is);
    std::vector<int> shape(rank);
    for (uint32_t d = 0; d < rank; ++d) shape[d] = static_cast<int>(ReadU32(is));
    Tensor t(shape);
    for (double &v : t.data) v = ReadF64(is);
    ps.Add(name, std::move(t));
  }
  return ps;
}

Tensor XavierInit(int fan_in, int fan_out, uint64_t seed) {
  if (fan_in < 1 || fan_out < 1)
    throw ConfigError("XavierInit requires positive fan_in and fan_out");
  double bound = std::sqrt(6.0 / (fan_in + fan_out));
  Rng rng(seed);
  Tensor t({fan_out, fan_in});
  for (double &v : t.data) v = rng.Uniform(-bound, bound);
  return t;
}

bool SameLayout(const ParameterSet &a, const ParameterSet &b) {
  if (a.Size() != b.Size()) return false;
  for (int i = 0; i < a.Size(); ++i) {
    if (a.Name(i) != b.Name(i)) return false;
    if (a.Value(i).shape != b.Value(i).shape) return false;
  }
  return true;
}

}  // namespace artic
