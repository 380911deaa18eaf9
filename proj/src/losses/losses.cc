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

#include "seqpose/losses/losses.h"

#include <filesystem>

#include "seqpose/common/error.h"
#include "seqpose/io/trajectory_io.h"

namespace seqpose {

void SequenceSample::Validate() const {
  const size_t n = global_pred.size();
  if (n < 2) {
    throw Error(ErrorCode::kLengthMismatch,
                "sequence needs at least 2 frames, got " + std::to_string(n));
  }
  if (global_gt.size() != n || vo_pred.size() != n - 1 ||
      vo_gt.size() != n - 1) {
    throw Error(ErrorCode::kLengthMismatch,
                "expected " + std::to_string(n) + " global and " +
                    std::to_string(n - 1) + " relative poses");
  }
}

double LossGlobal(const SequenceSample& s, const LossWeights& w,
                  const L1Options& l1) {
  s.Validate();
  double sum = 0.0;
  for (size_t i = 0; i < s.global_pred.size(); ++i) {
    sum += PoseDistance(s.global_gt[i], s.global_pred[i], w, l1);
  }
  return sum;
}

double LossVo(const SequenceSample& s, const LossWeights& w,
              const L1Options& l1) {
  s.Validate();
  double sum = 0.0;
  for (size_t k = 0; k < s.vo_pred.size(); ++k) {
    sum += PoseDistance(s.vo_gt[k], s.vo_pred[k], w, l1);
  }
  return sum;
}

double LossJoint(const SequenceSample& s, const LossWeights& w,
                 const L1Options& l1) {
  s.Validate();
  double sum = 0.0;
  for (size_t k = 0; k < s.vo_pred.size(); ++k) {
    sum += PoseDistance(s.global_pred[k + 1],
                        Compose(s.vo_pred[k], s.global_pred[k]), w, l1);
  }
  return sum;
}

double LossTotal(const SequenceSample& s, const LossBundle& b,
                 const L1Options& l1) {
  const double global = LossGlobal(s, b.weights_g, l1);
  const double vo = LossVo(s, b.vo(), l1);
  const double joint = LossJoint(s, b.joint(), l1);
  return global + vo + joint;
}

LossGradient LossGrad(const SequenceSample& s, const LossBundle& b,
                      const L1Options& l1) {
  s.Validate();
  const size_t n = s.global_pred.size();
  LossGradient grad;
  grad.global_pred.assign(n, Vector6d::Zero());
  grad.vo_pred.assign(n - 1, Vector6d::Zero());

  for (size_t i = 0; i < n; ++i) {
    const auto eval = jacobians::EvaluateDistance(s.global_gt[i],
                                                  s.global_pred[i],
                                                  b.weights_g, l1);
    grad.global_pred[i] += jacobians::ToLocal(s.global_pred[i], eval.p);
    grad.weights_g.d_beta += eval.d_beta;
    grad.weights_g.d_gamma += eval.d_gamma;
    grad.non_smooth |= eval.non_smooth;
  }

  WeightGradient& vo_w = b.shared ? grad.weights_g : grad.weights_vo;
  for (size_t k = 0; k + 1 < n; ++k) {
    const auto eval = jacobians::EvaluateDistance(s.vo_gt[k], s.vo_pred[k],
                                                  b.vo(), l1);
    grad.vo_pred[k] += jacobians::ToLocal(s.vo_pred[k], eval.p);
    vo_w.d_beta += eval.d_beta;
    vo_w.d_gamma += eval.d_gamma;
    grad.non_smooth |= eval.non_smooth;
  }

  WeightGradient& joint_w = b.shared ? grad.weights_g : grad.weights_joint;
  for (size_t k = 0; k + 1 < n; ++k) {
    const PoseSE3& next = s.global_pred[k + 1];
    const PoseSE3 predicted = Compose(s.vo_pred[k], s.global_pred[k]);
    const auto eval =
        jacobians::EvaluateDistance(next, predicted, b.joint(), l1);
    grad.global_pred[k + 1] += jacobians::ToLocal(next, eval.p_hat);
    jacobians::ComposePullback(s.vo_pred[k], s.global_pred[k], eval.p,
                               &grad.vo_pred[k], &grad.global_pred[k]);
    joint_w.d_beta += eval.d_beta;
    joint_w.d_gamma += eval.d_gamma;
    grad.non_smooth |= eval.non_smooth;
  }
  return grad;
}

SequenceSample MakeConsistentSample(const std::vector<PoseSE3>& global_pred,
                                    const std::vector<PoseSE3>& global_gt) {
  SequenceSample s;
  s.global_pred = global_pred;
  s.global_gt = global_gt;
  for (size_t k = 0; k + 1 < global_pred.size(); ++k) {
    s.vo_pred.push_back(RelativeBetween(global_pred[k], global_pred[k + 1]));
  }
  for (size_t k = 0; k + 1 < global_gt.size(); ++k) {
    s.vo_gt.push_back(RelativeBetween(global_gt[k], global_gt[k + 1]));
  }
  return s;
}

void WriteSample(const std::string& dir, const SequenceSample& s) {
  s.Validate();
  std::filesystem::create_directories(dir);
  const std::filesystem::path root(dir);
  WriteTrajectoryFile((root / "global_pred.txt").string(),
                      Trajectory::Sequential(s.global_pred));
  WriteTrajectoryFile((root / "vo_pred.txt").string(),
                      Trajectory::Sequential(s.vo_pred));
  WriteTrajectoryFile((root / "global_gt.txt").string(),
                      Trajectory::Sequential(s.global_gt));
  WriteTrajectoryFile((root / "vo_gt.txt").string(),
                      Trajectory::Sequential(s.vo_gt));
}

SequenceSample ReadSample(const std::string& dir) {
  const std::filesystem::path root(dir);
  SequenceSample s;
  s.global_pred = ReadTrajectoryFile((root / "global_pred.txt").string()).poses;
  s.vo_pred = ReadTrajectoryFile((root / "vo_pred.txt").string()).poses;
  s.global_gt = ReadTrajectoryFile((root / "global_gt.txt").string()).poses;
  s.vo_gt = ReadTrajectoryFile((root / "vo_gt.txt").string()).poses;
  s.Validate();
  return s;
}

}  // namespace seqpose
