// tests/test-vtv.cc

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
#include <filesystem>
#include <fstream>

#include "base/error.h"
#include "base/rng.h"
#include "doctest.h"
#include "vtv/palate.h"
#include "vtv/prior-table.h"
#include "vtv/vtv-extract.h"

using namespace artic;

namespace {

std::string TempPath(const std::string &name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

// A pellet frame with every pellet at the origin except the ones set.
Tensor OnePelletFrame() {
  Tensor pt({1, kNumPelletDims});
  return pt;
}

}  // namespace

TEST_CASE("palate fit recovers an exact quadratic") {
  std::vector<double> xs, ys;
  for (int i = 0; i <= 20; ++i) {
    double x = -2.0 + 0.2 * i;
    xs.push_back(x);
    ys.push_back(x * x);
  }
  PalateModel p = FitPalate(xs, ys);
  CHECK(std::fabs(p.a - 1.0) < 1e-9);
  CHECK(std::fabs(p.b) < 1e-9);
  CHECK(std::fabs(p.c) < 1e-9);
  CHECK(p.rms_residual < 1e-9);
}

TEST_CASE("palate fit recovers a line as a degenerate quadratic") {
  std::vector<double> xs, ys;
  for (int i = 0; i <= 10; ++i) {
    double x = 0.5 * i;
    xs.push_back(x);
    ys.push_back(2.0 * x + 1.0);
  }
  PalateModel p = FitPalate(xs, ys);
  CHECK(std::fabs(p.a) < 1e-9);
  CHECK(std::fabs(p.b - 2.0) < 1e-9);
  CHECK(std::fabs(p.c - 1.0) < 1e-9);
}

TEST_CASE("palate fit tolerates noise") {
  Rng rng(5);
  std::vector<double> xs, ys;
  for (int i = 0; i < 400; ++i) {
    double x = rng.Uniform(-3.0, 3.0);
    xs.push_back(x);
    ys.push_back(0.5 * x * x - 0.3 * x + 2.0 + 0.01 * rng.Gaussian());
  }
  PalateModel p = FitPalate(xs, ys);
  CHECK(std::fabs(p.a - 0.5) < 0.05);
  CHECK(std::fabs(p.b + 0.3) < 0.05);
  CHECK(std::fabs(p.c - 2.0) < 0.05);
}

TEST_CASE("palate fit uses the upper envelope") {
  // A dense cloud hanging below y = x^2 (like tongue samples under a
  // palate).  Per-bin maxima trace the curve, so the fit recovers the
  // curvature even though the bulk of the points lie well below it.
  std::vector<double> xs, ys;
  Rng rng(7);
  for (int i = 0; i < 4000; ++i) {
    double x = rng.Uniform(-2.0, 2.0);
    xs.push_back(x);
    ys.push_back(x * x - rng.Uniform(0.02, 1.5));
  }
  PalateModel p = FitPalate(xs, ys);
  CHECK(std::fabs(p.a - 1.0) < 0.15);
  // The envelope sits just below the true curve, never above it.
  CHECK(p.Eval(0.0) < 0.05);
  CHECK(p.Eval(0.0) > -0.5);
}

TEST_CASE("fewer than three distinct x values is an error") {
  CHECK_THROWS_AS(FitPalate({1.0, 1.0, 2.0}, {0.0, 1.0, 2.0}), DataError);
}

TEST_CASE("arc length of a line is exact") {
  PalateModel p;
  p.a = 0.0;
  p.b = 3.0 / 4.0;  // slope 0.75 -> factor 1.25
  p.c = 1.0;
  p.x_min = 0.0;
  p.x_max = 8.0;
  CHECK(p.ArcLength(4.0) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("arc length of a parabola matches numeric integration") {
  PalateModel p;
  p.a = 0.3;
  p.b = -0.2;
  p.c = 1.0;
  p.x_min = -2.0;
  p.x_max = 3.0;
  double numeric = 0.0;
  const int steps = 200000;
  for (int i = 0; i < steps; ++i) {
    double x = p.x_min + (2.5 - p.x_min) * (i + 0.5) / steps;
    double s = p.Slope(x);
    numeric += std::sqrt(1.0 + s * s) * (2.5 - p.x_min) / steps;
  }
  CHECK(p.ArcLength(2.5) == doctest::Approx(numeric).epsilon(1e-8));
}

TEST_CASE("min distance to a flat palate is |y|") {
  PalateModel p;  // y = 0 line
  p.x_min = -10.0;
  p.x_max = 10.0;
  double xm = 0.0;
  CHECK(p.MinDistance(1.5, -0.7, &xm) == doctest::Approx(0.7).epsilon(1e-9));
  CHECK(xm == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(p.MinDistance(-3.0, 2.5, &xm) == doctest::Approx(2.5).epsilon(1e-9));
}

TEST_CASE("min distance to a parabola agrees with brute force") {
  PalateModel p;
  p.a = -0.1;
  p.b = 0.8;
  p.c = 2.0;
  p.x_min = 0.0;
  p.x_max = 8.0;
  Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    double px = rng.Uniform(0.0, 8.0), py = rng.Uniform(-1.0, 3.0);
    double best = 1e300;
    for (int k = 0; k <= 2000000; ++k) {
      double x = p.x_min + (p.x_max - p.x_min) * k / 2000000.0;
      double dx = x - px, dy = p.Eval(x) - py;
      best = std::min(best, dx * dx + dy * dy);
    }
    CHECK(p.MinDistance(px, py, nullptr) ==
          doctest::Approx(std::sqrt(best)).epsilon(1e-6));
  }
}

TEST_CASE("flat palate vtv oracle: distances equal pellet |y|") {
  PalateModel flat;
  flat.x_min = -10.0;
  flat.x_max = 10.0;
  Tensor pt = OnePelletFrame();
  pt.At(0, kT1X) = 1.0;
  pt.At(0, kT1Y) = -0.8;
  pt.At(0, kT4X) = 3.0;
  pt.At(0, kT4Y) = -1.6;
  Tensor vtv = PelletsToVtvs(pt, flat, 0.0);
  CHECK(vtv.At(0, kTtcd) == doctest::Approx(0.8).epsilon(1e-9));
  CHECK(vtv.At(0, kTbcd) == doctest::Approx(1.6).epsilon(1e-9));
  // Arc length along a flat palate is x - x_min.
  CHECK(vtv.At(0, kTtcl) == doctest::Approx(11.0).epsilon(1e-9));
  CHECK(vtv.At(0, kTbcl) == doctest::Approx(13.0).epsilon(1e-9));
}

TEST_CASE("coincident lips give zero aperture") {
  PalateModel flat;
  flat.x_min = -1.0;
  flat.x_max = 1.0;
  Tensor pt = OnePelletFrame();
  pt.At(0, kUlX) = 0.4;
  pt.At(0, kUlY) = 1.0;
  pt.At(0, kLlX) = 0.4;
  pt.At(0, kLlY) = 1.0;
  Tensor vtv = PelletsToVtvs(pt, flat, 0.1);
  CHECK(vtv.At(0, kLa) == 0.0);
  CHECK(vtv.At(0, kLp) == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("tongue tip on the palate curve has zero constriction degree") {
  PalateModel p;
  p.a = -0.1;
  p.b = 0.0;
  p.c = 2.0;
  p.x_min = -3.0;
  p.x_max = 3.0;
  Tensor pt = OnePelletFrame();
  pt.At(0, kT1X) = 1.0;
  pt.At(0, kT1Y) = p.Eval(1.0);
  Tensor vtv = PelletsToVtvs(pt, p, 0.0);
  CHECK(vtv.At(0, kTtcd) < 1e-9);
}

TEST_CASE("pellet outside the fit domain flags the frame") {
  PalateModel flat;
  flat.x_min = 0.0;
  flat.x_max = 1.0;
  Tensor pt = OnePelletFrame();
  pt.At(0, kT1X) = 5.0;
  pt.At(0, kT1Y) = -1.0;
  std::vector<uint8_t> flags;
  Tensor vtv = PelletsToVtvs(pt, flat, 0.0, &flags);
  REQUIRE(flags.size() == 1);
  CHECK(flags[0] == 1);
  // Distance is measured to the clamped domain edge.
  CHECK(vtv.At(0, kTtcd) == doctest::Approx(std::hypot(4.0, 1.0)).epsilon(1e-9));
}

TEST_CASE("translation in y shifts constriction degrees equally") {
  PalateModel p;
  p.a = -0.05;
  p.b = 0.2;
  p.c = 1.0;
  p.x_min = -2.0;
  p.x_max = 4.0;
  Tensor pt = OnePelletFrame();
  pt.At(0, kT1X) = 0.5;
  pt.At(0, kT1Y) = 0.0;
  pt.At(0, kT4X) = 2.0;
  pt.At(0, kT4Y) = 0.2;
  Tensor v1 = PelletsToVtvs(pt, p, 0.0);

  PalateModel p2 = p;
  p2.c += 1.0;
  Tensor pt2 = pt;
  pt2.At(0, kUlY) += 1.0;
  pt2.At(0, kLlY) += 1.0;
  pt2.At(0, kT1Y) += 1.0;
  pt2.At(0, kT4Y) += 1.0;
  Tensor v2 = PelletsToVtvs(pt2, p2, 0.0);
  for (int j = 0; j < kNumVtvs; ++j)
    CHECK(v2.At(0, j) == doctest::Approx(v1.At(0, j)).epsilon(1e-9));
}

TEST_CASE("prior table round-trips") {
  PriorTable t;
  t.provenance = "LF";
  t.Set("aa", {1, 0, -1, 2, 0, 1, 1, 0, 0, 0});
  t.Set("sil", {0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
  std::string path = TempPath("artic-priors.txt");
  t.Save(path);
  PriorTable back = PriorTable::Load(path);
  CHECK(back == t);
  std::filesystem::remove(path);
}

TEST_CASE("prior table parse errors carry line numbers") {
  std::string path = TempPath("artic-bad-priors.txt");
  {
    std::ofstream os(path);
    os << "aa 1 2 3\n";
  }
  try {
    PriorTable::Load(path);
    CHECK(false);
  } catch (const DataError &e) {
    CHECK(std::string(e.what()).find(":1") != std::string::npos);
  }
  std::filesystem::remove(path);
}

TEST_CASE("duplicate phone is an error") {
  std::string path = TempPath("artic-dup-priors.txt");
  {
    std::ofstream os(path);
    os << "aa 0 0 0 0 0 0 0 0 0 0\n";
    os << "aa 1 1 1 1 1 1 1 1 1 1\n";
  }
  CHECK_THROWS_AS(PriorTable::Load(path), DataError);
  std::filesystem::remove(path);
}

TEST_CASE("statistical priors round to the nearest integer") {
  PriorTable seed;
  seed.Set("aa", {0, 0, 0, 0, 0, 0, 1, 0, 1, 0});
  seed.Set("sil", {0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
  // Phone aa averages 1.4 in LA (dim 1) and -0.5 in LP (dim 0).
  Tensor seq({4, kNumVtvs});
  std::vector<std::string> phones = {"aa", "aa", "sil", "sil"};
  seq.At(0, 0) = -0.4;
  seq.At(1, 0) = -0.6;  // mean -0.5 -> rounds to -1 (away from zero)
  seq.At(0, 1) = 1.3;
  seq.At(1, 1) = 1.5;   // mean 1.4 -> 1
  PriorTable sf = ComputeStatisticalPriors({&seq}, {&phones}, seed, "SF");
  CHECK(sf.Get("aa")[0] == -1);
  CHECK(sf.Get("aa")[1] == 1);
  // Last four features are copied from the seed.
  CHECK(sf.Get("aa")[6] == 1);
  CHECK(sf.Get("aa")[8] == 1);
  CHECK(sf.provenance == "SF");
}

TEST_CASE("statistical priors are deterministic") {
  PriorTable seed;
  seed.Set("aa", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  Tensor seq({3, kNumVtvs});
  Rng rng(41);
  for (double &v : seq.data) v = rng.Uniform(-2, 2);
  std::vector<std::string> phones = {"aa", "aa", "aa"};
  PriorTable a = ComputeStatisticalPriors({&seq}, {&phones}, seed, "SF");
  PriorTable b = ComputeStatisticalPriors({&seq}, {&phones}, seed, "SF");
  CHECK(a == b);
}

TEST_CASE("phone with zero frames is an error naming the phone") {
  PriorTable seed;
  seed.Set("aa", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  seed.Set("bb", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  Tensor seq({2, kNumVtvs});
  std::vector<std::string> phones = {"aa", "aa"};
  try {
    ComputeStatisticalPriors({&seq}, {&phones}, seed, "SF");
    CHECK(false);
  } catch (const DataError &e) {
    CHECK(std::string(e.what()).find("bb") != std::string::npos);
  }
}

TEST_CASE("frame priors expand piecewise constant") {
  PriorTable t;
  t.Set("aa", {1, 1, 1, 1, 1, 1, 0, 0, 0, 0});
  t.Set("bb", {2, 2, 2, 2, 2, 2, 0, 0, 1, 0});
  std::vector<std::string> phones = {"aa", "aa", "bb"};
  Tensor priors = PriorsForFrames(phones, t);
  REQUIRE(priors.Rows() == 3);
  CHECK(priors.At(0, 0) == 1.0);
  CHECK(priors.At(1, 5) == 1.0);
  CHECK(priors.At(2, 0) == 2.0);
  CHECK(priors.At(2, 8) == 1.0);
}

TEST_CASE("missing phone in the table is an error") {
  PriorTable t;
  t.Set("aa", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  std::vector<std::string> phones = {"aa", "oops"};
  CHECK_THROWS_AS(PriorsForFrames(phones, t), DataError);
}
