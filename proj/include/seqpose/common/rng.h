/*
 * Copyright 2026 The seqpose Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEQPOSE_COMMON_RNG_H_
#define SEQPOSE_COMMON_RNG_H_

#include <array>
#include <cstdint>

#include "Eigen/Core"

namespace seqpose {

// SplitMix64, used only to expand a 64-bit seed into generator state.
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
uint64_t SplitMix64(uint64_t& state);

// xoshiro256** (Blackman & Vigna). The stream is fully determined by the seed,
// so every platform and any reimplementation following the update equations in
// README.md reproduces the same variates.
//
// Derived quantities:
//   Uniform()  = (Next() >> 11) * 2^-53                     in [0, 1)
//   Normal()   = sqrt(-2 ln(1 - u1)) * cos(2 pi u2)          one Box-Muller
//                value per call, u1 drawn before u2
class Rng {
 public:
  explicit Rng(uint64_t seed);

  // Independent stream for a sub-component, keyed by a small integer.
  static Rng ForStream(uint64_t seed, uint64_t stream);

  uint64_t Next();
  double Uniform();
  double Uniform(double lo, double hi);
  double Normal();
  double Normal(double mean, double sigma) { return mean + sigma * Normal(); }

  // Uniform direction on the unit sphere (three normals, normalized).
  Eigen::Vector3d UnitVector();

 private:
  std::array<uint64_t, 4> s_;
};

}  // namespace seqpose

#endif  // SEQPOSE_COMMON_RNG_H_
