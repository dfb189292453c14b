// data/manifest.cc

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

#include "data/manifest.h"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>

#include "base/error.h"
#include "base/io.h"

namespace artic {

namespace {

std::string ResolvePath(const std::filesystem::path &base,
                        const std::string &p) {
  std::filesystem::path fp(p);
  if (fp.is_absolute()) return p;
  return (base / fp).lexically_normal().string();
}

}  // namespace

std::vector<std::string> DatasetManifest::Speakers() const {
  std::set<std::string> s;
  for (const auto &e : entries) s.insert(e.speaker);
  return std::vector<std::string>(s.begin(), s.end());
}

char DatasetManifest::GenderOf(const std::string &speaker) const {
  for (const auto &e : entries)
    if (e.speaker == speaker) return e.gender;
  throw DataError("unknown speaker: " + speaker);
}

std::vector<int> DatasetManifest::EntriesOf(const std::string &speaker) const {
  std::vector<int> out;
  for (size_t i = 0; i < entries.size(); ++i)
    if (entries[i].speaker == speaker) out.push_back(static_cast<int>(i));
  return out;
}

DatasetManifest LoadManifest(const std::string &path,
                             const std::string &exclusion_path) {
  std::set<std::pair<std::string, std::string>> excluded;
  if (!exclusion_path.empty()) {
    for (const std::string &raw : ReadLines(exclusion_path)) {
      std::string line = raw;
      size_t hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      std::vector<std::string> tok = SplitWhitespace(line);
      if (tok.empty()) continue;
      if (tok.size() != 2)
        throw DataError("exclusion list lines are `<speaker> <utt-id>`: " +
                        exclusion_path);
      excluded.insert({tok[0], tok[1]});
    }
  }

  const std::filesystem::path base =
      std::filesystem::path(path).parent_path();
  DatasetManifest m;
  std::map<std::string, char> speaker_gender;
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<std::string> lines = ReadLines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string line = lines[i];
    std::string location = path + ":" + std::to_string(i + 1);
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;
    std::vector<std::string> tok = SplitWhitespace(line);
    if (tok.size() != 5 && tok.size() != 6)
      throw DataError("manifest line needs 5 or 6 fields (" + location + ")");
    UtteranceEntry e;
    e.speaker = tok[0];
    if (tok[1] != "M" && tok[1] != "F")
      throw DataError("gender must be M or F (" + location + ")");
    e.gender = tok[1][0];
    e.utt_id = tok[2];
    e.audio_path = ResolvePath(base, tok[3]);
    e.align_path = ResolvePath(base, tok[4]);
    if (tok.size() == 6) e.artic_path = ResolvePath(base, tok[5]);

    auto it = speaker_gender.find(e.speaker);
    if (it == speaker_gender.end())
      speaker_gender[e.speaker] = e.gender;
    else if (it->second != e.gender)
      throw DataError("speaker " + e.speaker + " has inconsistent gender (" +
                      location + ")");
    if (!seen.insert({e.speaker, e.utt_id}).second)
      throw DataError("duplicate utterance " + e.speaker + "/" + e.utt_id +
                      " (" + location + ")");
    if (excluded.count({e.speaker, e.utt_id})) continue;

    if (!FileExists(e.audio_path))
      throw DataError("missing audio/feature file " + e.audio_path + " (" +
                      location + ")");
    if (!FileExists(e.align_path))
      throw DataError("missing alignment file " + e.align_path + " (" +
                      location + ")");
    if (!e.artic_path.empty() && !FileExists(e.artic_path))
      throw DataError("missing articulatory file " + e.artic_path + " (" +
                      location + ")");
    m.entries.push_back(std::move(e));
  }
  if (m.entries.empty())
    throw DataError("manifest has no usable utterances: " + path);
  std::sort(m.entries.begin(), m.entries.end(),
            [](const UtteranceEntry &a, const UtteranceEntry &b) {
              if (a.speaker != b.speaker) return a.speaker < b.speaker;
              return a.utt_id < b.utt_id;
            });
  return m;
}

void SaveManifest(const std::string &path, const DatasetManifest &manifest) {
  std::ostringstream os;
  for (const auto &e : manifest.entries) {
    os << e.speaker << ' ' << e.gender << ' ' << e.utt_id << ' '
       << e.audio_path << ' ' << e.align_path;
    if (!e.artic_path.empty()) os << ' ' << e.artic_path;
    os << '\n';
  }
  WriteTextFile(path, os.str());
}

}  // namespace artic
