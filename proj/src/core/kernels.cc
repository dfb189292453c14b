// core/kernels.cc

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

#include "core/kernels.h"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace artic {
namespace kernels {

namespace {

int g_override_threads = 0;

int EnvThreads() {
  static int cached = [] {
    const char *s = std::getenv("ARTIC_THREADS");
    if (s == nullptr) return 0;
    int v = std::atoi(s);
    return v > 0 ? v : 0;
  }();
  return cached;
}

// Below this many multiply-adds the fork/join overhead dominates.
constexpr int64_t kParallelFlopCutoff = 64 * 1024;

bool UseParallel(int64_t work) {
  if (WorkerThreads() <= 1) return false;
#ifdef _OPENMP
  if (omp_in_parallel()) return false;
#endif
  return work >= kParallelFlopCutoff;
}

}  // namespace

int WorkerThreads() {
  if (g_override_threads > 0) return g_override_threads;
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  int env = EnvThreads();
  if (env > 0 && env < n) n = env;
  return n;
}

void SetWorkerThreads(int n) { g_override_threads = n > 0 ? n : 0; }

void MatMulNN(const double *a, const double *b, double *c, int m, int k, int n,
              bool accumulate) {
  if (UseParallel(static_cast<int64_t>(m) * k * n))
    omp::MatMulNN(a, b, c, m, k, n, accumulate);
  else
    serial::MatMulNN(a, b, c, m, k, n, accumulate);
}

void MatMulNT(const double *a, const double *b, double *c, int m, int k, int n,
              bool accumulate) {
  if (UseParallel(static_cast<int64_t>(m) * k * n))
    omp::MatMulNT(a, b, c, m, k, n, accumulate);
  else
    serial::MatMulNT(a, b, c, m, k, n, accumulate);
}

void MatMulTN(const double *a, const double *b, double *c, int m, int k, int n,
              bool accumulate) {
  if (UseParallel(static_cast<int64_t>(m) * k * n))
    omp::MatMulTN(a, b, c, m, k, n, accumulate);
  else
    serial::MatMulTN(a, b, c, m, k, n, accumulate);
}

void Tanh(const double *x, double *y, int64_t n) {
  if (UseParallel(n * 8))
    omp::Tanh(x, y, n);
  else
    serial::Tanh(x, y, n);
}

void Sigmoid(const double *x, double *y, int64_t n) {
  if (UseParallel(n * 8))
    omp::Sigmoid(x, y, n);
  else
    serial::Sigmoid(x, y, n);
}

}  // namespace kernels
}  // namespace artic
