// tests/test-grad.cc

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
#include <cstdio>
#include <filesystem>

#include "base/error.h"
#include "base/rng.h"
#include "doctest.h"
#include "grad/grad-check.h"
#include "grad/optimizer.h"
#include "grad/param-set.h"
#include "grad/tape.h"

using namespace artic;

TEST_CASE("xavier bound at fan 1+1") {
  Tensor t = XavierInit(1, 1, 42);
  double bound = std::sqrt(3.0);
  CHECK(t.shape == std::vector<int>{1, 1});
  CHECK(std::fabs(t.data[0]) <= bound);
}

TEST_CASE("xavier mean near zero over many draws") {
  Tensor t = XavierInit(100, 100, 7);
  double sum = 0.0;
  for (double v : t.data) sum += v;
  CHECK(std::fabs(sum / t.NumEl()) < 0.02);
}

TEST_CASE("xavier deterministic for equal seeds, distinct across seeds") {
  Tensor a = XavierInit(13, 17, 5);
  Tensor b = XavierInit(13, 17, 5);
  Tensor c = XavierInit(13, 17, 6);
  CHECK(a.data == b.data);
  CHECK(a.data != c.data);
}

TEST_CASE("xavier sample variance matches 2/(fan_in+fan_out)") {
  // 10^5 draws per spec'd property.
  Tensor t = XavierInit(500, 200, 11);
  double mean = 0.0;
  for (double v : t.data) mean += v;
  mean /= t.NumEl();
  double var = 0.0;
  for (double v : t.data) var += (v - mean) * (v - mean);
  var /= t.NumEl();
  double expect = 2.0 / (500 + 200);
  CHECK(std::fabs(var - expect) / expect < 0.05);
}

TEST_CASE("backward of sum gives all-ones gradient") {
  ParameterSet ps;
  ps.Add("p", Tensor::Matrix(2, 3, {1, 2, 3, 4, 5, 6}));
  Tape tape(&ps);
  Var loss = tape.Sum(tape.Param("p"));
  ps.ZeroGrads();
  tape.Backward(loss);
  for (double g : ps.Grad("p").data) CHECK(g == 1.0);
}

TEST_CASE("backward of half squared norm gives the parameter back") {
  ParameterSet ps;
  ps.Add("p", Tensor::FromVector({0.5, -1.25, 2.0}));
  Tape tape(&ps);
  Var p = tape.Param("p");
  Var loss = tape.Scale(tape.SumSq(p), 0.5);
  ps.ZeroGrads();
  tape.Backward(loss);
  for (int i = 0; i < 3; ++i)
    CHECK(ps.Grad("p").data[i] == doctest::Approx(ps.Value("p").data[i]).epsilon(1e-12));
}

TEST_CASE("finite differences agree on a mixed graph") {
  Rng rng(123);
  ParameterSet ps;
  Tensor w({3, 4});
  for (double &v : w.data) v = rng.Uniform(-1, 1);
  Tensor b({4});
  for (double &v : b.data) v = rng.Uniform(-1, 1);
  ps.Add("w", w);
  ps.Add("b", b);
  Tensor x = Tensor::Matrix(2, 3, {0.3, -0.2, 0.9, 1.1, 0.4, -0.7});
  Tensor target = Tensor::Matrix(2, 4, {0.1, 0.2, 0.3, 0.4, -0.1, -0.2, -0.3, -0.4});

  auto loss_value = [&]() {
    Tape t(&ps);
    Var h = t.Tanh(t.AddRowVec(t.MatMul(t.Input(x), t.Param("w")), t.Param("b")));
    return t.ScalarValue(t.SumSq(t.Sub(h, t.Input(target))));
  };
  Tape t(&ps);
  Var h = t.Tanh(t.AddRowVec(t.MatMul(t.Input(x), t.Param("w")), t.Param("b")));
  Var loss = t.SumSq(t.Sub(h, t.Input(target)));
  ps.ZeroGrads();
  t.Backward(loss);
  double err = FiniteDifferenceCheck(loss_value, ps);
  CHECK(err < 1e-6);
}

TEST_CASE("finite differences on slicing, stacking and broadcasts") {
  Rng rng(99);
  ParameterSet ps;
  Tensor w({4, 2});
  for (double &v : w.data) v = rng.Uniform(-1, 1);
  Tensor peep({2});
  for (double &v : peep.data) v = rng.Uniform(-1, 1);
  ps.Add("w", w);
  ps.Add("peep", peep);
  Tensor x = Tensor::Matrix(3, 4, {0.1, -0.4, 0.2, 0.8, -0.3, 0.5, 0.7, -0.6, 0.25, 0.5, -0.75, 1.0});

  auto build = [&](Tape &t) {
    Var xs = t.Input(x);
    std::vector<Var> rows;
    for (int r = 0; r < 3; ++r) {
      Var xr = t.Row(xs, r);
      Var z = t.MatMul(xr, t.Param("w"));
      Var g = t.Sigmoid(t.MulRowVec(z, t.Param("peep")));
      rows.push_back(g);
    }
    Var stacked = t.StackRows(rows);
    Var sliced = t.ColRange(stacked, 0, 2);
    return t.SumSq(sliced);
  };
  auto loss_value = [&]() {
    Tape t(&ps);
    return t.ScalarValue(build(t));
  };
  Tape t(&ps);
  Var loss = build(t);
  ps.ZeroGrads();
  t.Backward(loss);
  CHECK(FiniteDifferenceCheck(loss_value, ps) < 1e-6);
}

TEST_CASE("quadratic loss passes the checker to roundoff") {
  ParameterSet ps;
  ps.Add("p", Tensor::FromVector({1.0, -2.0, 0.5, 3.0, -0.25}));
  auto loss_value = [&]() {
    Tape t(&ps);
    return t.ScalarValue(t.SumSq(t.Param("p")));
  };
  Tape t(&ps);
  Var loss = t.SumSq(t.Param("p"));
  ps.ZeroGrads();
  t.Backward(loss);
  CHECK(FiniteDifferenceCheck(loss_value, ps) < 1e-8);
}

TEST_CASE("non-finite loss is a hard error") {
  ParameterSet ps;
  ps.Add("weights", Tensor::FromVector({1e200}));
  Tape t(&ps);
  Var loss = t.SumSq(t.Param("weights"));  // 1e400 overflows
  ps.ZeroGrads();
  CHECK_THROWS_AS(t.Backward(loss), NumericError);
}

TEST_CASE("gradient overflow during accumulation is a hard error") {
  ParameterSet ps;
  ps.Add("weights", Tensor::FromVector({1e-300}));
  Tensor huge = Tensor::FromVector({1e308});
  ps.ZeroGrads();
  auto backward_once = [&] {
    Tape t(&ps);
    Var loss = t.Sum(t.Mul(t.Input(huge), t.Param("weights")));
    t.Backward(loss);
  };
  backward_once();                       // grad = 1e308, still finite
  CHECK(ps.Grad("weights").data[0] == 1e308);
  CHECK_THROWS_AS(backward_once(), NumericError);  // 2e308 -> inf
}

TEST_CASE("adam first step moves a zero parameter to about -lr") {
  ParameterSet ps;
  ps.Add("p", Tensor::FromVector({0.0}));
  ps.Grad("p").data[0] = 1.0;
  ps.MarkGradsPopulated();
  OptimizerConfig cfg = OptimizerConfig::Adam();
  CHECK(cfg.learning_rate == 0.1);
  CHECK(cfg.beta1 == 0.9);
  CHECK(cfg.beta2 == 0.999);
  CHECK(cfg.epsilon == 1e-8);
  Optimizer opt(cfg);
  opt.Step(ps);
  // First-step closed form: m-hat = v-hat = 1, update = lr/(1+eps).
  CHECK(ps.Value("p").data[0] == doctest::Approx(-0.1).epsilon(1e-6));
  CHECK(ps.StepCount() == 1);
}

TEST_CASE("adam with zero gradients leaves parameters unchanged") {
  ParameterSet ps;
  ps.Add("p", Tensor::FromVector({0.7, -0.3}));
  ps.ZeroGrads();
  ps.MarkGradsPopulated();
  Optimizer opt(OptimizerConfig::Adam());
  opt.Step(ps);
  CHECK(ps.Value("p").data[0] == 0.7);
  CHECK(ps.Value("p").data[1] == -0.3);
}

TEST_CASE("optimizer refuses to run before any backward") {
  ParameterSet ps;
  ps.Add("p", Tensor::FromVector({1.0}));
  Optimizer opt(OptimizerConfig::Adam());
  CHECK_THROWS_AS(opt.Step(ps), NumericError);
}

TEST_CASE("sgd exponential decay schedule") {
  OptimizerConfig cfg = OptimizerConfig::SgdExpDecay();
  CHECK(cfg.learning_rate == 0.01);
  CHECK(cfg.decay_every == 10000);
  CHECK(cfg.decay_rate == 0.96);
  Optimizer opt(cfg);
  CHECK(opt.EffectiveLr(0) == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(opt.EffectiveLr(9999) == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(opt.EffectiveLr(10000) == doctest::Approx(0.0096).epsilon(1e-12));
  CHECK(opt.EffectiveLr(25000) == doctest::Approx(0.01 * 0.96 * 0.96).epsilon(1e-12));
}

TEST_CASE("sgd step uses the scheduled rate and zero grad is a no-op") {
  ParameterSet ps;
  ps.Add("p", Tensor::FromVector({1.0}));
  ps.Grad("p").data[0] = 2.0;
  ps.MarkGradsPopulated();
  Optimizer opt(OptimizerConfig::SgdExpDecay());
  opt.Step(ps);
  CHECK(ps.Value("p").data[0] == doctest::Approx(1.0 - 0.01 * 2.0).epsilon(1e-15));
  ps.ZeroGrads();
  double before = ps.Value("p").data[0];
  opt.Step(ps);
  CHECK(ps.Value("p").data[0] == before);
}

TEST_CASE("two identical optimizer runs are bit-identical") {
  auto run = [] {
    ParameterSet ps;
    ps.Add("w", XavierInit(4, 4, 3));
    Optimizer opt(OptimizerConfig::Adam());
    Tensor x = Tensor::Matrix(1, 4, {0.2, -0.4, 0.6, -0.8});
    for (int step = 0; step < 25; ++step) {
      Tape t(&ps);
      Var y = t.MatMul(t.Input(x), t.Param("w"));
      Var loss = t.SumSq(y);
      ps.ZeroGrads();
      t.Backward(loss);
      opt.Step(ps);
    }
    return ps.Value("w").data;
  };
  CHECK(run() == run());
}

TEST_CASE("checkpoint round-trips bit-exactly") {
  ParameterSet ps;
  ps.Add("layer0.w", XavierInit(7, 5, 21));
  ps.Add("layer0.b", Tensor::FromVector({0.1, -0.2, 0.3, 1e-300, 5e300}));
  ps.SetStepCount(12345);
  std::string path = (std::filesystem::temp_directory_path() / "artic-ckpt-test.bin").string();
  ps.Save(path);
  ParameterSet back = ParameterSet::Load(path);
  CHECK(back.StepCount() == 12345);
  REQUIRE(back.Size() == ps.Size());
  for (int i = 0; i < ps.Size(); ++i) {
    CHECK(back.Name(i) == ps.Name(i));
    CHECK(back.Value(i).shape == ps.Value(i).shape);
    CHECK(back.Value(i).data == ps.Value(i).data);
  }
  std::filesystem::remove(path);
}

TEST_CASE("gradients accumulate across backward calls until zeroed") {
  ParameterSet ps;
  ps.Add("p", Tensor::FromVector({2.0}));
  ps.ZeroGrads();
  for (int i = 0; i < 3; ++i) {
    Tape t(&ps);
    Var loss = t.Sum(t.Param("p"));
    t.Backward(loss);
  }
  CHECK(ps.Grad("p").data[0] == 3.0);
  ps.ZeroGrads();
  CHECK(ps.Grad("p").data[0] == 0.0);
}
