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

#ifndef SEQPOSE_SIM_SIMULATOR_H_
#define SEQPOSE_SIM_SIMULATOR_H_

#include <cstdint>
#include <vector>

#include "seqpose/attention/feature_tensor.h"
#include "seqpose/pose/pose.h"

namespace seqpose {

// Synthetic sequence generator. Global measurements are noisy but
// independent per frame (no drift); relative measurements are accurate per
// step but accumulate error when chained.
//
// Each stage draws from its own stream Rng::ForStream(seed, k):
//   k = 1 trajectory, 2 global corruption, 3 relative corruption, 4 features.
struct SimConfig {
  int n_frames = 7;
  uint64_t seed = 0;
  double step_mean = 0.2;       // meters
  double step_jitter = 0.1;     // relative, step ~ step_mean * U(1 - j, 1 + j)
  double turn_sigma = 3.0;      // degrees per step (heading)
  double global_t_sigma = 0.25; // meters per axis
  double global_r_sigma = 5.0;  // degrees
  double outlier_rate = 0.1;
  double outlier_t = 3.0;       // meters
  double vo_t_sigma = 0.01;     // meters per axis per step
  double vo_r_sigma = 0.1;      // degrees per step
  TensorShape feat_dims{4, 4, 8};
  double covis_overlap = 0.7;

  // Throws Error(kInvalidArgument) for n_frames < 2, negative sigmas or
  // out-of-range rates.
  void Validate() const;
};

struct GlobalMeasurements {
  std::vector<PoseSE3> poses;
  std::vector<bool> outlier_mask;
};

struct SimOutput {
  std::vector<PoseSE3> gt;
  std::vector<PoseSE3> global_meas;
  std::vector<PoseSE3> vo_meas;  // n_frames - 1
  std::vector<bool> outlier_mask;
  std::vector<FeatureTensor> features;
};

// Planar random walk. Heading turns by Normal(0, turn_sigma) per step and the
// camera moves forward along it; the camera also tilts (pitch) by an
// independent Normal(0, turn_sigma / 4) per frame.
std::vector<PoseSE3> SimulateTrajectory(const SimConfig& cfg);

// Per-frame independent noise: Normal translation per axis, rotation by a
// Normal angle about a uniform axis (right-multiplied), and with probability
// outlier_rate an extra translation jump of length outlier_t in a uniform
// direction. Every frame consumes the same number of draws.
GlobalMeasurements CorruptGlobal(const std::vector<PoseSE3>& gt,
                                 const SimConfig& cfg);

// True relative poses with small per-step noise of the same form.
std::vector<PoseSE3> CorruptVo(const std::vector<PoseSE3>& gt,
                               const SimConfig& cfg);

// overlap * L + (1 - overlap) * noise_k with a shared landmark tensor L, then
// every channel rescaled to unit RMS over the h*w pixels.
std::vector<FeatureTensor> SynthFeatures(const std::vector<PoseSE3>& gt,
                                         const SimConfig& cfg);

SimOutput Simulate(const SimConfig& cfg);

}  // namespace seqpose

#endif  // SEQPOSE_SIM_SIMULATOR_H_
