// bench/bench-kernels.cc

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

// Times the serial reference kernels against the parallel versions at the
// matrix shapes the models actually hit (dense trunks, LSTM gate blocks,
// batched window encodings).  Prints one table row per shape with the
// speedup; a checksum of the outputs guards against dead-code elimination.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "base/rng.h"
#include "core/kernels.h"
#include "core/tensor.h"

using namespace artic;

namespace {

double TimeMs(const std::function<void()> &fn, int reps) {
  fn();  // warm up
  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  std::chrono::duration<double, std::milli> dt =
      std::chrono::steady_clock::now() - start;
  return dt.count() / reps;
}

struct Shape {
  int m, k, n;
  int reps;
};

double g_sink = 0.0;

void BenchMatMul(const Shape &s) {
  Rng rng(42);
  Tensor a({s.m, s.k}), b({s.k, s.n}), c({s.m, s.n});
  for (int64_t i = 0; i < a.NumEl(); ++i) a.data.data()[i] = rng.Gaussian();
  for (int64_t i = 0; i < b.NumEl(); ++i) b.data.data()[i] = rng.Gaussian();

  double t_serial = TimeMs(
      [&] {
        kernels::serial::MatMulNN(a.data.data(), b.data.data(), c.data.data(), s.m, s.k, s.n);
        g_sink += c.data.data()[0];
      },
      s.reps);
  double t_omp = TimeMs(
      [&] {
        kernels::omp::MatMulNN(a.data.data(), b.data.data(), c.data.data(), s.m, s.k, s.n);
        g_sink += c.data.data()[0];
      },
      s.reps);
  std::printf("matmul-nn  %5d x %5d x %5d  %10.3f  %10.3f  %6.2fx\n", s.m, s.k,
              s.n, t_serial, t_omp, t_serial / t_omp);
}

void BenchElementwise(int64_t n, int reps) {
  Rng rng(7);
  Tensor x({1, static_cast<int>(n)}), y({1, static_cast<int>(n)});
  for (int64_t i = 0; i < n; ++i) x.data.data()[i] = rng.Gaussian();

  double t_serial = TimeMs(
      [&] {
        kernels::serial::Tanh(x.data.data(), y.data.data(), n);
        g_sink += y.data.data()[0];
      },
      reps);
  double t_omp = TimeMs(
      [&] {
        kernels::omp::Tanh(x.data.data(), y.data.data(), n);
        g_sink += y.data.data()[0];
      },
      reps);
  std::printf("tanh       %17lld  %10.3f  %10.3f  %6.2fx\n",
              static_cast<long long>(n), t_serial, t_omp, t_serial / t_omp);
}

}  // namespace

int main() {
  std::printf("threads: %d\n\n", kernels::WorkerThreads());
  std::printf("kernel     shape                serial-ms      omp-ms  speedup\n");
  std::printf("---------- -----------------  ----------  ----------  -------\n");

  // Window-model trunk layers: batch x wide dense blocks.
  BenchMatMul({128, 975, 1000, 5});
  BenchMatMul({128, 1000, 1000, 5});
  // Encoder/bottleneck layers.
  BenchMatMul({128, 250, 70, 20});
  BenchMatMul({128, 70, 10, 50});
  // LSTM gate block for one frame at the published width.
  BenchMatMul({1, 500, 1000, 50});
  // Whole-utterance activations.
  BenchElementwise(1 << 16, 50);
  BenchElementwise(1 << 20, 5);

  std::printf("\n(checksum %g)\n", g_sink);
  return 0;
}
