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

#include "seqpose/attention/vo_sequence.h"

#include "seqpose/common/error.h"
#include "seqpose/common/rng.h"

namespace seqpose {

LinearHead LinearHead::Zero(int channels) {
  LinearHead head;
  head.weight = Eigen::Matrix<double, 6, Eigen::Dynamic>::Zero(6, channels);
  return head;
}

LinearHead LinearHead::Seeded(int channels, uint64_t seed, double scale) {
  LinearHead head = Zero(channels);
  Rng rng(seed);
  for (Eigen::Index col = 0; col < head.weight.cols(); ++col) {
    for (int row = 0; row < 6; ++row) {
      head.weight(row, col) = rng.Uniform(-scale, scale);
    }
  }
  return head;
}

PoseSE3 LinearHead::Readout(const FeatureTensor& output) const {
  if (output.c() != weight.cols()) {
    throw Error(ErrorCode::kDimMismatch,
                "head expects " + std::to_string(weight.cols()) +
                    " channels, got " + std::to_string(output.c()));
  }
  const int c = output.c();
  const size_t pixels = static_cast<size_t>(output.h()) * output.w();
  Eigen::VectorXd pooled = Eigen::VectorXd::Zero(c);
  for (size_t p = 0; p < pixels; ++p) {
    for (int j = 0; j < c; ++j) pooled[j] += output.data()[p * c + j];
  }
  pooled /= static_cast<double>(pixels);
  const Vector6d tw = weight * pooled + bias;
  return {tw.head<3>(), QuatExp(LogRotation{tw.tail<3>()})};
}

VoSequenceResult RunVoSequence(const std::vector<FeatureTensor>& features,
                               const ConvLstmParams& params,
                               const LinearHead& head) {
  if (features.empty()) {
    throw Error(ErrorCode::kDimMismatch, "VO sequence needs at least one frame");
  }
  VoSequenceResult result;
  ConvLstmState state = ConvLstmState::Zero(
      features.front().h(), features.front().w(), params.hidden_channels);
  for (const FeatureTensor& x : features) {
    CheckSameShape(features.front(), x, "VO sequence");
    ConvLstmStepResult step = ConvLstmStep(x, state, params);
    result.relative_poses.push_back(head.Readout(step.output));
    result.hidden_states.push_back(std::move(step.output));
    state = std::move(step.state);
  }
  return result;
}

}  // namespace seqpose
