// tests/test-kernels.cc

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "base/rng.h"
#include "core/kernels.h"
#include "core/tensor.h"
#include "doctest.h"

using namespace artic;

namespace {

std::vector<double> RandomVec(int n, uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(n);
  for (double &x : v) x = rng.Uniform(-2.0, 2.0);
  return v;
}

}  // namespace

TEST_CASE("matmul agrees with a 2x2 hand computation") {
  // [1 2; 3 4] * [5 6; 7 8] = [19 22; 43 50]
  std::vector<double> a = {1, 2, 3, 4};
  std::vector<double> b = {5, 6, 7, 8};
  std::vector<double> c(4, 0.0);
  kernels::MatMulNN(a.data(), b.data(), c.data(), 2, 2, 2);
  CHECK(c == std::vector<double>{19, 22, 43, 50});
}

TEST_CASE("matmul transpose variants match explicit transposition") {
  const int m = 5, k = 7, n = 4;
  std::vector<double> a = RandomVec(m * k, 1);
  std::vector<double> b = RandomVec(k * n, 2);
  std::vector<double> at(k * m), bt(n * k);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) at[j * m + i] = a[i * k + j];
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) bt[j * k + i] = b[i * n + j];

  std::vector<double> c0(m * n, 0.0), c1(m * n, 0.0), c2(m * n, 0.0);
  kernels::MatMulNN(a.data(), b.data(), c0.data(), m, k, n);
  kernels::MatMulNT(a.data(), bt.data(), c1.data(), m, k, n);
  kernels::MatMulTN(at.data(), b.data(), c2.data(), m, k, n);
  for (int i = 0; i < m * n; ++i) {
    CHECK(c1[i] == doctest::Approx(c0[i]).epsilon(1e-12));
    CHECK(c2[i] == doctest::Approx(c0[i]).epsilon(1e-12));
  }
}

TEST_CASE("accumulate mode adds onto existing output") {
  std::vector<double> a = {1, 0, 0, 1};
  std::vector<double> b = {2, 3, 4, 5};
  std::vector<double> c = {10, 10, 10, 10};
  kernels::MatMulNN(a.data(), b.data(), c.data(), 2, 2, 2, /*accumulate=*/true);
  CHECK(c == std::vector<double>{12, 13, 14, 15});
}

TEST_CASE("serial and omp paths are bit-identical") {
  const int m = 37, k = 53, n = 29;
  std::vector<double> a = RandomVec(m * k, 10);
  std::vector<double> b = RandomVec(k * n, 11);
  std::vector<double> cs(m * n, 0.0), cp(m * n, 0.0);
  kernels::serial::MatMulNN(a.data(), b.data(), cs.data(), m, k, n);
  kernels::omp::MatMulNN(a.data(), b.data(), cp.data(), m, k, n);
  CHECK(cs == cp);

  std::vector<double> tin = RandomVec(m * n, 12);
  std::vector<double> ts(tin.size()), tp(tin.size());
  kernels::serial::Tanh(tin.data(), ts.data(), (int64_t)tin.size());
  kernels::omp::Tanh(tin.data(), tp.data(), (int64_t)tin.size());
  CHECK(ts == tp);

  std::vector<double> sin2 = RandomVec(m * n, 13);
  std::vector<double> ss(sin2.size()), sp(sin2.size());
  kernels::serial::Sigmoid(sin2.data(), ss.data(), (int64_t)sin2.size());
  kernels::omp::Sigmoid(sin2.data(), sp.data(), (int64_t)sin2.size());
  CHECK(ss == sp);
}

TEST_CASE("omp result does not depend on the thread count") {
  const int m = 64, k = 48, n = 32;
  std::vector<double> a = RandomVec(m * k, 20);
  std::vector<double> b = RandomVec(k * n, 21);
  std::vector<double> c1(m * n, 0.0), c4(m * n, 0.0);
  int saved = kernels::WorkerThreads();
  kernels::SetWorkerThreads(1);
  kernels::omp::MatMulNN(a.data(), b.data(), c1.data(), m, k, n);
  kernels::SetWorkerThreads(4);
  kernels::omp::MatMulNN(a.data(), b.data(), c4.data(), m, k, n);
  kernels::SetWorkerThreads(saved);
  CHECK(c1 == c4);
}

TEST_CASE("dispatcher matches the serial reference") {
  const int m = 96, k = 80, n = 72;  // above the parallel cutoff
  std::vector<double> a = RandomVec(m * k, 30);
  std::vector<double> b = RandomVec(k * n, 31);
  std::vector<double> cs(m * n, 0.0), cd(m * n, 0.0);
  kernels::serial::MatMulNN(a.data(), b.data(), cs.data(), m, k, n);
  kernels::MatMulNN(a.data(), b.data(), cd.data(), m, k, n);
  CHECK(cs == cd);
}

TEST_CASE("elementwise kernels compute tanh and sigmoid") {
  std::vector<double> v = {0.0, 1.0, -1.0};
  std::vector<double> t(3), s(3);
  kernels::Tanh(v.data(), t.data(), 3);
  kernels::Sigmoid(v.data(), s.data(), 3);
  CHECK(t[0] == 0.0);
  CHECK(t[1] == doctest::Approx(std::tanh(1.0)).epsilon(1e-15));
  CHECK(s[0] == 0.5);
  CHECK(s[1] == doctest::Approx(1.0 / (1.0 + std::exp(-1.0))).epsilon(1e-15));
  CHECK(s[2] == doctest::Approx(1.0 / (1.0 + std::exp(1.0))).epsilon(1e-15));
}

TEST_CASE("rng uniform stays in range and is deterministic") {
  Rng a(77), b(77);
  for (int i = 0; i < 1000; ++i) {
    double x = a.Uniform();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    CHECK(x == b.Uniform());
  }
}

TEST_CASE("rng gaussian moments are sane") {
  Rng rng(5);
  const int n = 200000;
  double sum = 0, sumsq = 0;
  for (int i = 0; i < n; ++i) {
    double x = rng.Gaussian();
    sum += x;
    sumsq += x * x;
  }
  double mean = sum / n;
  double var = sumsq / n - mean * mean;
  CHECK(std::fabs(mean) < 0.01);
  CHECK(std::fabs(var - 1.0) < 0.02);
}

TEST_CASE("mixseed separates stream tags") {
  uint64_t a = MixSeed(42, "model");
  uint64_t b = MixSeed(42, "data");
  uint64_t c = MixSeed(43, "model");
  CHECK(a != b);
  CHECK(a != c);
  CHECK(a == MixSeed(42, "model"));
}

TEST_CASE("tensor shape helpers") {
  Tensor t = Tensor::Matrix(2, 3, {1, 2, 3, 4, 5, 6});
  CHECK(t.Rows() == 2);
  CHECK(t.Cols() == 3);
  CHECK(t.NumEl() == 6);
  CHECK(t.At(1, 2) == 6.0);
  CHECK(t.ShapeString() == "[2x3]");
  Tensor z = Tensor::Zeros({4});
  CHECK(z.NumEl() == 4);
  CHECK(z.data == std::vector<double>(4, 0.0));
}
