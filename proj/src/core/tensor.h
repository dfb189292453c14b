// core/tensor.h

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

#ifndef ARTIC_CORE_TENSOR_H_
#define ARTIC_CORE_TENSOR_H_

#include <cstdint>
#include <string>
#include <vector>

namespace artic {

// Dense row-major tensor of 64-bit floats.  Rank is 1 or 2 everywhere in
// this toolkit; the shape vector keeps the general form for file formats.
struct Tensor {
  std::vector<int> shape;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> s);
  Tensor(std::vector<int> s, double fill);

  static Tensor Zeros(std::vector<int> s) { return Tensor(std::move(s)); }
  static Tensor Scalar(double v) { return Tensor({1}, v); }
  static Tensor FromVector(const std::vector<double> &v);
  // Row-major rank-2 from flat data.
  static Tensor Matrix(int rows, int cols, std::vector<double> v);

  int64_t NumEl() const { return static_cast<int64_t>(data.size()); }
  int Rank() const { return static_cast<int>(shape.size()); }
  int Rows() const;
  int Cols() const;

  double &At(int r, int c) { return data[static_cast<size_t>(r) * Cols() + c]; }
  double At(int r, int c) const { return data[static_cast<size_t>(r) * Cols() + c]; }
  double *RowPtr(int r) { return data.data() + static_cast<size_t>(r) * Cols(); }
  const double *RowPtr(int r) const { return data.data() + static_cast<size_t>(r) * Cols(); }

  bool SameShape(const Tensor &other) const { return shape == other.shape; }
  std::string ShapeString() const;

  void Fill(double v);
  bool AllFinite() const;
};

// Throws NumericError naming `what` if any entry is NaN/Inf.
void CheckFinite(const Tensor &t, const std::string &what);

}  // namespace artic

#endif  // ARTIC_CORE_TENSOR_H_
