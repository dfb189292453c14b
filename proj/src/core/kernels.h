// core/kernels.h

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

#ifndef ARTIC_CORE_KERNELS_H_
#define ARTIC_CORE_KERNELS_H_

#include <cstdint>

// Dense inner loops used by the training and feature code.  Each kernel has
// a serial reference implementation and an OpenMP one; the unprefixed entry
// points dispatch on problem size and nesting.  Every kernel assigns one
// output element to exactly one thread, so results are bit-identical across
// thread counts.
//
// MatMul shapes: NN computes C[m x n] = A[m x k] * B[k x n];
// NT takes B as [n x k]; TN takes A as [k x m].  With accumulate, the
// product is added onto C instead of overwriting it.

namespace artic {
namespace kernels {

// Worker count used by parallel regions: min(OMP max threads, ARTIC_THREADS
// if set).  SetWorkerThreads overrides both (0 restores the default).
int WorkerThreads();
void SetWorkerThreads(int n);

namespace serial {
void MatMulNN(const double *a, const double *b, double *c, int m, int k, int n,
              bool accumulate = false);
void MatMulNT(const double *a, const double *b, double *c, int m, int k, int n,
              bool accumulate = false);
void MatMulTN(const double *a, const double *b, double *c, int m, int k, int n,
              bool accumulate = false);
void Tanh(const double *x, double *y, int64_t n);
void Sigmoid(const double *x, double *y, int64_t n);
}  // namespace serial

namespace omp {
void MatMulNN(const double *a, const double *b, double *c, int m, int k, int n,
              bool accumulate = false);
void MatMulNT(const double *a, const double *b, double *c, int m, int k, int n,
              bool accumulate = false);
void MatMulTN(const double *a, const double *b, double *c, int m, int k, int n,
              bool accumulate = false);
void Tanh(const double *x, double *y, int64_t n);
void Sigmoid(const double *x, double *y, int64_t n);
}  // namespace omp

void MatMulNN(const double *a, const double *b, double *c, int m, int k, int n,
              bool accumulate = false);
void MatMulNT(const double *a, const double *b, double *c, int m, int k, int n,
              bool accumulate = false);
void MatMulTN(const double *a, const double *b, double *c, int m, int k, int n,
              bool accumulate = false);
void Tanh(const double *x, double *y, int64_t n);
void Sigmoid(const double *x, double *y, int64_t n);

}  // namespace kernels
}  // namespace artic

#endif  // ARTIC_CORE_KERNELS_H_
