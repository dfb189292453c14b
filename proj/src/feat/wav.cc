// feat/wav.cc

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

#include "feat/wav.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>

#include "base/error.h"
#include "base/io.h"

namespace artic {

namespace {

uint16_t ReadU16(std::istream &is) {
  uint8_t b0 = ReadU8(is), b1 = ReadU8(is);
  return static_cast<uint16_t>(b0 | (b1 << 8));
}

void WriteU16(std::ostream &os, uint16_t v) {
  WriteU8(os, static_cast<uint8_t>(v & 0xff));
  WriteU8(os, static_cast<uint8_t>(v >> 8));
}

std::string ReadTag(std::istream &is) {
  char tag[4];
  is.read(tag, 4);
  if (!is) return "";
  return std::string(tag, 4);
}

}  // namespace

WavData ReadWav(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DataError("cannot open wav file: " + path);
  if (ReadTag(is) != "RIFF") throw DataError("not a RIFF file: " + path);
  ReadU32(is);  // riff chunk size, unused
  if (ReadTag(is) != "WAVE") throw DataError("not a WAVE file: " + path);

  bool have_fmt = false;
  uint16_t audio_format = 0, channels = 0, bits = 0;
  uint32_t sample_rate = 0;
  WavData wav;
  while (true) {
    std::string tag = ReadTag(is);
    if (tag.empty()) break;
    uint32_t size = ReadU32(is);
    if (tag == "fmt ") {
      audio_format = ReadU16(is);
      channels = ReadU16(is);
      sample_rate = ReadU32(is);
      ReadU32(is);  // byte rate
      ReadU16(is);  // block align
      bits = ReadU16(is);
      if (size > 16) is.seekg(size - 16, std::ios::cur);
      have_fmt = true;
    } else if (tag == "data") {
      if (!have_fmt) throw DataError("wav data chunk before fmt: " + path);
      if (audio_format != 1) throw DataError("wav is not PCM: " + path);
      if (channels != 1) throw DataError("wav is not mono: " + path);
      if (bits != 16) throw DataError("wav is not 16-bit: " + path);
      uint32_t n = size / 2;
      wav.samples.resize(n);
      for (uint32_t i = 0; i < n; ++i) {
        int16_t s = static_cast<int16_t>(ReadU16(is));
        wav.samples[i] = s / 32768.0;
      }
      wav.sample_rate = static_cast<int>(sample_rate);
      return wav;
    } else {
      is.seekg(size + (size & 1), std::ios::cur);  // chunks are word-aligned
    }
    if (!is) throw DataError("truncated wav file: " + path);
  }
  throw DataError("wav file has no data chunk: " + path);
}

void WriteWav(const std::string &path, const WavData &wav) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataError("cannot write wav file: " + path);
  uint32_t data_bytes = static_cast<uint32_t>(wav.samples.size() * 2);
  os.write("RIFF", 4);
  WriteU32(os, 36 + data_bytes);
  os.write("WAVE", 4);
  os.write("fmt ", 4);
  WriteU32(os, 16);
  WriteU16(os, 1);  // PCM
  WriteU16(os, 1);  // mono
  WriteU32(os, static_cast<uint32_t>(wav.sample_rate));
  WriteU32(os, static_cast<uint32_t>(wav.sample_rate * 2));
  WriteU16(os, 2);   // block align
  WriteU16(os, 16);  // bits
  os.write("data", 4);
  WriteU32(os, data_bytes);
  for (double s : wav.samples) {
    double clipped = std::clamp(s, -1.0, 32767.0 / 32768.0);
    int16_t q = static_cast<int16_t>(std::lrint(clipped * 32768.0));
    WriteU16(os, static_cast<uint16_t>(q));
  }
  if (!os) throw DataError("short write to wav file: " + path);
}

}  // namespace artic
