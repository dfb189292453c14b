// base/io.h

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

#ifndef ARTIC_BASE_IO_H_
#define ARTIC_BASE_IO_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace artic {

// Little-endian binary primitives.  All file formats in this toolkit are
// little-endian regardless of host order.
void WriteU8(std::ostream &os, uint8_t v);
void WriteU32(std::ostream &os, uint32_t v);
void WriteU64(std::ostream &os, uint64_t v);
void WriteF32(std::ostream &os, float v);
void WriteF64(std::ostream &os, double v);
uint8_t ReadU8(std::istream &is);
uint32_t ReadU32(std::istream &is);
uint64_t ReadU64(std::istream &is);
float ReadF32(std::istream &is);
double ReadF64(std::istream &is);

// Text helpers.
std::string Trim(const std::string &s);
std::vector<std::string> SplitWhitespace(const std::string &s);
std::vector<std::string> Split(const std::string &s, char sep);
bool ParseDouble(const std::string &s, double *out);
bool ParseInt(const std::string &s, long *out);

// Whole-file text I/O.  Throws DataError on failure.
std::string ReadTextFile(const std::string &path);
void WriteTextFile(const std::string &path, const std::string &content);
std::vector<std::string> ReadLines(const std::string &path);

bool FileExists(const std::string &path);
void MakeDirs(const std::string &path);

}  // namespace artic

#endif  // ARTIC_BASE_IO_H_
