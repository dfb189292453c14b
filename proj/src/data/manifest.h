// data/manifest.h

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

#ifndef ARTIC_DATA_MANIFEST_H_
#define ARTIC_DATA_MANIFEST_H_

#include <string>
#include <vector>

namespace artic {

struct UtteranceEntry {
  std::string speaker;
  char gender = 'M';  // 'M' or 'F'
  std::string utt_id;
  std::string audio_path;  // .wav audio or an acoustic feature file
  std::string align_path;
  std::string artic_path;  // optional; empty when absent
};

// Utterance list sorted by (speaker, utt_id).  Relative paths in the
// manifest file resolve against the manifest's directory.
struct DatasetManifest {
  std::vector<UtteranceEntry> entries;

  std::vector<std::string> Speakers() const;  // unique, sorted
  char GenderOf(const std::string &speaker) const;
  std::vector<int> EntriesOf(const std::string &speaker) const;
};

// Line format: `<speaker> <gender> <utt-id> <audio-or-feat> <align> [<artic>]`,
// `#` comments.  The optional exclusion list holds `<speaker> <utt-id>`
// lines; matching utterances are dropped.  Referenced files must exist.
DatasetManifest LoadManifest(const std::string &path,
                             const std::string &exclusion_path = "");
void SaveManifest(const std::string &path, const DatasetManifest &manifest);

}  // namespace artic

#endif  // ARTIC_DATA_MANIFEST_H_
