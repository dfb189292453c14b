// core/kernels-omp.cc

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

#include <cmath>

#include "core/kernels.h"

// Parallelism is over output rows (or element blocks); each row is written
// by one thread with a serial inner loop, so summation order never depends
// on the thread count.

namespace artic {
namespace kernels {
namespace omp {

void MatMulNN(const double *a, const double *b, double *c, int m, int k, int n,
              bool accumulate) {
  int nt = WorkerThreads();
#pragma omp parallel for num_threads(nt) schedule(static)
  for (int i = 0; i < m; ++i) {
    const double *ai = a + static_cast<int64_t>(i) * k;
    double *ci = c + static_cast<int64_t>(i) * n;
    if (!accumulate)
      for (int j = 0; j < n; ++j) ci[j] = 0.0;
    for (int l = 0; l < k; ++l) {
      double av = ai[l];
      const double *bl = b + static_cast<int64_t>(l) * n;
      for (int j = 0; j < n; ++j) ci[j] += av * bl[j];
    }
  }
}

void MatMulNT(const double *a, const double *b, double *c, int m, int k, int n,
              bool accumulate) {
  int nt = WorkerThreads();
#pragma omp parallel for num_threads(nt) schedule(static)
  for (int i = 0; i < m; ++i) {
    const double *ai = a + static_cast<int64_t>(i) * k;
    double *ci = c + static_cast<int64_t>(i) * n;
    for (int j = 0; j < n; ++j) {
      const double *bj = b + static_cast<int64_t>(j) * k;
      double sum = 0.0;
      for (int l = 0; l < k; ++l) sum += ai[l] * bj[l];
      ci[j] = accumulate ? ci[j] + sum : sum;
    }
  }
}

void MatMulTN(const double *a, const double *b, double *c, int m, int k, int n,
              bool accumulate) {
  int nt = WorkerThreads();
#pragma omp parallel for num_threads(nt) schedule(static)
  for (int i = 0; i < m; ++i) {
    double *ci = c + static_cast<int64_t>(i) * n;
    if (!accumulate)
      for (int j = 0; j < n; ++j) ci[j] = 0.0;
    for (int l = 0; l < k; ++l) {
      double av = a[static_cast<int64_t>(l) * m + i];
      const double *bl = b + static_cast<int64_t>(l) * n;
      for (int j = 0; j < n; ++j) ci[j] += av * bl[j];
    }
  }
}

void Tanh(const double *x, double *y, int64_t n) {
  int nt = WorkerThreads();
#pragma omp parallel for num_threads(nt) schedule(static)
  for (int64_t i = 0; i < n; ++i) y[i] = std::tanh(x[i]);
}

void Sigmoid(const double *x, double *y, int64_t n) {
  int nt = WorkerThreads();
#pragma omp parallel for num_threads(nt) schedule(static)
  for (int64_t i = 0; i < n; ++i) y[i] = 1.0 / (1.0 + std::exp(-x[i]));
}

}  // namespace omp
}  // namespace kernels
}  // namespace artic
