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

#ifndef SEQPOSE_ATTENTION_VO_SEQUENCE_H_
#define SEQPOSE_ATTENTION_VO_SEQUENCE_H_

#include <cstdint>
#include <vector>

#include "Eigen/Core"
#include "seqpose/attention/convlstm.h"
#include "seqpose/attention/feature_tensor.h"
#include "seqpose/pose/pose.h"

namespace seqpose {

// Global average pooling followed by one affine map to (t, w) in R^6.
struct LinearHead {
  Eigen::Matrix<double, 6, Eigen::Dynamic> weight;
  Vector6d bias = Vector6d::Zero();

  static LinearHead Zero(int channels);
  // Uniform(-scale, scale) weights, zero bias.
  static LinearHead Seeded(int channels, uint64_t seed, double scale);

  // (t, w) -> PoseSE3 via QuatExp.
  PoseSE3 Readout(const FeatureTensor& output) const;
};

struct VoSequenceResult {
  std::vector<FeatureTensor> hidden_states;
  std::vector<PoseSE3> relative_poses;
};

// Runs the ConvLSTM from a zero state over `features`, collecting every
// hidden state and reading one relative pose from each step's output.
VoSequenceResult RunVoSequence(const std::vector<FeatureTensor>& features,
                               const ConvLstmParams& params,
                               const LinearHead& head);

}  // namespace seqpose

#endif  // SEQPOSE_ATTENTION_VO_SEQUENCE_H_
