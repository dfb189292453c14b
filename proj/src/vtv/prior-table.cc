// vtv/prior-table.cc

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

#include "vtv/prior-table.h"

#include <cmath>
#include <sstream>

#include "base/error.h"
#include "base/io.h"
#include "vtv/vtv-extract.h"

namespace artic {

const char *const kPriorFeatureNames[kNumPriorFeatures] = {
    "LP",  "LA",  "TTCL", "TTCD",      "TBCL",
    "TBCD", "VEL", "GLO",  "consonant", "silence"};

void PriorTable::Set(const std::string &phone, const PriorVector &v) {
  rows_[phone] = v;
}

bool PriorTable::Has(const std::string &phone) const {
  return rows_.count(phone) != 0;
}

const PriorVector &PriorTable::Get(const std::string &phone) const {
  auto it = rows_.find(phone);
  if (it == rows_.end())
    throw DataError("prior table has no entry for phone '" + phone + "'");
  return it->second;
}

std::vector<std::string> PriorTable::Phones() const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (const auto &kv : rows_) out.push_back(kv.first);
  return out;  // std::map iterates sorted
}

bool PriorTable::operator==(const PriorTable &other) const {
  return provenance == other.provenance && rows_ == other.rows_;
}

void PriorTable::Save(const std::string &path) const {
  std::ostringstream os;
  if (!provenance.empty()) os << "# provenance: " << provenance << "\n";
  for (const auto &kv : rows_) {
    os << kv.first;
    for (int v : kv.second) os << ' ' << v;
    os << '\n';
  }
  WriteTextFile(path, os.str());
}

PriorTable PriorTable::Load(const std::string &path) {
  PriorTable table;
  std::vector<std::string> lines = ReadLines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string line = lines[i];
    std::string location = path + ":" + std::to_string(i + 1);
    size_t hash = line.find('#');
    if (hash != std::string::npos) {
      std::string comment = Trim(line.substr(hash + 1));
      if (comment.rfind("provenance:", 0) == 0)
        table.provenance = Trim(comment.substr(11));
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    std::vector<std::string> tok = SplitWhitespace(line);
    if (tok.size() != 1 + kNumPriorFeatures)
      throw DataError("prior table line has " + std::to_string(tok.size() - 1) +
                      " values, want 10 (" + location + ")");
    if (table.Has(tok[0]))
      throw DataError("duplicate phone '" + tok[0] + "' (" + location + ")");
    PriorVector v;
    for (int j = 0; j < kNumPriorFeatures; ++j) {
      long val = 0;
      if (!ParseInt(tok[j + 1], &val))
        throw DataError("non-integer prior value '" + tok[j + 1] + "' (" +
                        location + ")");
      v[j] = static_cast<int>(val);
    }
    table.Set(tok[0], v);
  }
  if (table.NumPhones() == 0)
    throw DataError("prior table is empty: " + path);
  return table;
}

PriorTable ComputeStatisticalPriors(
    const std::vector<const Tensor *> &z_vtv_sequences,
    const std::vector<const std::vector<std::string> *> &frame_phones,
    const PriorTable &seed, const std::string &provenance) {
  if (z_vtv_sequences.size() != frame_phones.size())
    throw DataError("ComputeStatisticalPriors: sequence/label count mismatch");
  std::map<std::string, std::array<double, kNumVtvs>> sums;
  std::map<std::string, int64_t> counts;
  for (size_t u = 0; u < z_vtv_sequences.size(); ++u) {
    const Tensor &seq = *z_vtv_sequences[u];
    const std::vector<std::string> &phones = *frame_phones[u];
    if (seq.Rows() != static_cast<int>(phones.size()))
      throw DataError("ComputeStatisticalPriors: frame/label count mismatch");
    if (seq.Cols() != kNumVtvs)
      throw DataError("ComputeStatisticalPriors: expected 6 VTV columns");
    for (int t = 0; t < seq.Rows(); ++t) {
      const std::string &ph = phones[t];
      if (!seed.Has(ph))
        throw DataError("phone '" + ph + "' missing from seed table");
      auto &acc = sums[ph];
      for (int j = 0; j < kNumVtvs; ++j) acc[j] += seq.At(t, j);
      counts[ph] += 1;
    }
  }
  PriorTable out;
  out.provenance = provenance;
  for (const std::string &ph : seed.Phones()) {
    auto it = counts.find(ph);
    if (it == counts.end() || it->second == 0)
      throw DataError("phone '" + ph + "' has zero frames in the data");
    PriorVector v;
    const auto &acc = sums[ph];
    for (int j = 0; j < kNumVtvs; ++j) {
      double mean = acc[j] / static_cast<double>(it->second);
      v[j] = static_cast<int>(std::lround(mean));  // ties away from zero
    }
    const PriorVector &seed_v = seed.Get(ph);
    for (int j = kNumVtvs; j < kNumPriorFeatures; ++j) v[j] = seed_v[j];
    out.Set(ph, v);
  }
  return out;
}

Tensor PriorsForFrames(const std::vector<std::string> &frame_phones,
                       const PriorTable &table) {
  const int n = static_cast<int>(frame_phones.size());
  Tensor out({n, kNumPriorFeatures});
  for (int t = 0; t < n; ++t) {
    const PriorVector &v = table.Get(frame_phones[t]);
    for (int j = 0; j < kNumPriorFeatures; ++j)
      out.At(t, j) = static_cast<double>(v[j]);
  }
  return out;
}

}  // namespace artic
