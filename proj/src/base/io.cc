// base/io.cc

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

#include "base/io.h"

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "base/error.h"

namespace artic {

namespace {

template <typename T>
void WriteLe(std::ostream &os, T v) {
  unsigned char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  // Hosts here are little-endian; keep byte order explicit anyway.
  os.write(reinterpret_cast<const char *>(buf), sizeof(T));
}

template <typename T>
T ReadLe(std::istream &is) {
  unsigned char buf[sizeof(T)];
  is.read(reinterpret_cast<char *>(buf), sizeof(T));
  if (!is) throw DataError("unexpected end of binary stream");
  T v;
  std::memcpy(&v, buf, sizeof(T));
  return v;
}

}  // namespace

void WriteU8(std::ostream &os, uint8_t v) { WriteLe(os, v); }
void WriteU32(std::ostream &os, uint32_t v) { WriteLe(os, v); }
void WriteU64(std::ostream &os, uint64_t v) { WriteLe(os, v); }
void WriteF32(std::ostream &os, float v) { WriteLe(os, v); }
void WriteF64(std::ostream &os, double v) { WriteLe(os, v); }
uint8_t ReadU8(std::istream &is) { return ReadLe<uint8_t>(is); }
uint32_t ReadU32(std::istream &is) { return ReadLe<uint32_t>(is); }
uint64_t ReadU64(std::istream &is) { return ReadLe<uint64_t>(is); }
float ReadF32(std::istream &is) { return ReadLe<float>(is); }
double ReadF64(std::istream &is) { return ReadLe<double>(is); }

std::string Trim(const std::string &s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> SplitWhitespace(const std::string &s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> Split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

bool ParseDouble(const std::string &s, double *out) {
  if (s.empty()) return false;
  char *end = nullptr;
  errno = 0;
  double v = std::strtod(s.c_str(), &end);
  if (errno != 0 || end != s.c_str() + s.size()) return false;
  *out = v;
  return true;
}

bool ParseInt(const std::string &s, long *out) {
  if (s.empty()) return false;
  char *end = nullptr;
  errno = 0;
  long v = std::strtol(s.c_str(), &end, 10);
  if (errno != 0 || end != s.c_str() + s.size()) return false;
  *out = v;
  return true;
}

std::string ReadTextFile(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DataError("cannot open file: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string &path, const std::string &content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataError("cannot write file: " + path);
  os << content;
  if (!os) throw DataError("write failed: " + path);
}

std::vector<std::string> ReadLines(const std::string &path) {
  std::string text = ReadTextFile(path);
  std::vector<std::string> lines = Split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

bool FileExists(const std::string &path) {
  std::error_code ec;
  return std::filesystem::exists(path, ec);
}

void MakeDirs(const std::string &path) {
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec) throw DataError("cannot create directory " + path + ": " + ec.message());
}

}  // namespace artic
