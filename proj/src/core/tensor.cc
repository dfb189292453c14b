// core/tensor.cc

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

#include "core/tensor.h"

#include <cmath>
#include <numeric>
#include <sstream>

#include "base/error.h"

namespace artic {

namespace {
int64_t ShapeNumEl(const std::vector<int> &s) {
  int64_t n = 1;
  for (int d : s) {
    if (d <= 0) throw DataError("tensor dimensions must be positive");
    n *= d;
  }
  return n;
}
}  // namespace

Tensor::Tensor(std::vector<int> s) : shape(std::move(s)) {
  data.assign(static_cast<size_t>(ShapeNumEl(shape)), 0.0);
}

Tensor::Tensor(std::vector<int> s, double fill) : shape(std::move(s)) {
  data.assign(static_cast<size_t>(ShapeNumEl(shape)), fill);
}

Tensor Tensor::FromVector(const std::vector<double> &v) {
  Tensor t;
  t.shape = {static_cast<int>(v.size())};
  t.data = v;
  return t;
}

Tensor Tensor::Matrix(int rows, int cols, std::vector<double> v) {
  if (static_cast<int64_t>(v.size()) != static_cast<int64_t>(rows) * cols)
    throw DataError("matrix data length does not match rows*cols");
  Tensor t;
  t.shape = {rows, cols};
  t.data = std::move(v);
  return t;
}

int Tensor::Rows() const { return shape.empty() ? 0 : shape[0]; }

int Tensor::Cols() const {
  if (Rank() == 2) return shape[1];
  if (Rank() == 1) return shape[0];
  throw DataError("Cols() on tensor of rank " + std::to_string(Rank()));
}

std::string Tensor::ShapeString() const {
  std::ostringstream ss;
  ss << "[";
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) ss << "x";
    ss << shape[i];
  }
  ss << "]";
  return ss.str();
}

void Tensor::Fill(double v) { std::fill(data.begin(), data.end(), v); }

bool Tensor::AllFinite() const {
  for (double v : data)
    if (!std::isfinite(v)) return false;
  return true;
}

void CheckFinite(const Tensor &t, const std::string &what) {
  if (!t.AllFinite()) throw NumericError("non-finite values in " + what);
}

}  // namespace artic
