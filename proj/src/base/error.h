// base/error.h

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

#ifndef ARTIC_BASE_ERROR_H_
#define ARTIC_BASE_ERROR_H_

#include <stdexcept>
#include <string>

namespace artic {

// Bad configuration or invalid option combination.  CLI exit code 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

// Malformed or missing data files, shape mismatches in inputs.  Exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string &msg) : std::runtime_error(msg) {}
};

// NaN/Inf or other numeric failure during computation.  Exit code 3.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string &msg) : std::runtime_error(msg) {}
};

}  // namespace artic

#endif  // ARTIC_BASE_ERROR_H_
