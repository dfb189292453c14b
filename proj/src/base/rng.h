// base/rng.h

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

#ifndef ARTIC_BASE_RNG_H_
#define ARTIC_BASE_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace artic {

// Deterministic random stream.  Floating-point draws are mapped from raw
// 64-bit output by hand so sequences are identical across standard library
// implementations (std::uniform_real_distribution is not portable).
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t NextU64() { return gen_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double Uniform() {
    return static_cast<double>(gen_() >> 11) * (1.0 / 9007199254740992.0);
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Standard normal via Box-Muller; one spare cached per pair.
  double Gaussian();

  // Uniform integer in [0, n).
  int UniformInt(int n);

  template <typename T>
  void Shuffle(std::vector<T> &v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(UniformInt(static_cast<int>(i)));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Stable sub-seed derivation: lets one master seed feed many independent
// streams keyed by a tag (e.g. a parameter name).  FNV-1a over the tag,
// mixed with the master seed.
uint64_t MixSeed(uint64_t seed, std::string_view tag);

}  // namespace artic

#endif  // ARTIC_BASE_RNG_H_
