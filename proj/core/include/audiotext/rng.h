/* Copyright 2026 The audiotext Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef AUDIOTEXT_RNG_H_
#define AUDIOTEXT_RNG_H_

#include <cstdint>
#include <random>
#include <span>

namespace audiotext {

// SplitMix64 finalizer; a bijective 64-bit mix.
std::uint64_t SplitMix64(std::uint64_t x);

// Seed for item `index` of a stream rooted at `global_seed`.
std::uint64_t DeriveSeed(std::uint64_t global_seed, std::uint64_t index);

// Deterministic random source. std::mt19937_64 output is fixed by the
// standard, but std distributions are not, so every distribution used in
// this project is implemented here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double Uniform();
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform integer in [0, n); n > 0.
  std::uint64_t UniformInt(std::uint64_t n);

  // Standard normal via Box-Muller (no cached second value).
  double Normal();
  double Normal(double mean, double stddev) { return mean + stddev * Normal(); }

  // Fisher-Yates shuffle.
  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(UniformInt(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace audiotext

#endif  // AUDIOTEXT_RNG_H_
