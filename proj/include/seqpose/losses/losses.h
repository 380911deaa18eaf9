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

#ifndef SEQPOSE_LOSSES_LOSSES_H_
#define SEQPOSE_LOSSES_LOSSES_H_

#include <string>
#include <vector>

#include "seqpose/pose/distance.h"
#include "seqpose/pose/pose.h"

namespace seqpose {

// One training window of N frames. vo entry k is the relative pose that
// carries frame k onto frame k + 1.
struct SequenceSample {
  std::vector<PoseSE3> global_pred;
  std::vector<PoseSE3> vo_pred;
  std::vector<PoseSE3> global_gt;
  std::vector<PoseSE3> vo_gt;

  // Throws Error(kLengthMismatch) unless N >= 2 and all lists agree.
  void Validate() const;
  int num_frames() const { return static_cast<int>(global_pred.size()); }
};

// Independent (beta, gamma) per loss term unless `shared` is set, in which
// case `weights_g` is used for all three terms.
struct LossBundle {
  LossWeights weights_g;
  LossWeights weights_vo;
  LossWeights weights_joint;
  bool shared = false;

  static LossBundle Uniform(const LossWeights& w) { return {w, w, w, false}; }
  static LossBundle Shared(const LossWeights& w) { return {w, w, w, true}; }

  const LossWeights& vo() const { return shared ? weights_g : weights_vo; }
  const LossWeights& joint() const { return shared ? weights_g : weights_joint; }
};

double LossGlobal(const SequenceSample& s, const LossWeights& w,
                  const L1Options& l1 = {});
double LossVo(const SequenceSample& s, const LossWeights& w,
              const L1Options& l1 = {});
// Consistency of predictions only: sum_k D(P_{k+1}, vo_k * P_k).
double LossJoint(const SequenceSample& s, const LossWeights& w,
                 const L1Options& l1 = {});
// LossGlobal + LossVo + LossJoint, summed in that order.
double LossTotal(const SequenceSample& s, const LossBundle& b,
                 const L1Options& l1 = {});

struct WeightGradient {
  double d_beta = 0.0;
  double d_gamma = 0.0;
};

// Gradient of LossTotal w.r.t. the learnable quantities: every predicted pose
// (local coordinates [dt; dw], see jacobians::ToLocal) and the (beta, gamma)
// of each term. Ground-truth poses are constants and carry no gradient.
// With a shared bundle the whole weight gradient lands in `weights_g`.
struct LossGradient {
  std::vector<Vector6d> global_pred;
  std::vector<Vector6d> vo_pred;
  WeightGradient weights_g;
  WeightGradient weights_vo;
  WeightGradient weights_joint;
  bool non_smooth = false;
};

LossGradient LossGrad(const SequenceSample& s, const LossBundle& b,
                      const L1Options& l1 = L1Options::Smoothed());

// Sample whose vo lists are the relative poses of the global lists.
SequenceSample MakeConsistentSample(const std::vector<PoseSE3>& global_pred,
                                    const std::vector<PoseSE3>& global_gt);

// Reads/writes global_pred.txt, vo_pred.txt, global_gt.txt, vo_gt.txt.
void WriteSample(const std::string& dir, const SequenceSample& s);
SequenceSample ReadSample(const std::string& dir);

}  // namespace seqpose

#endif  // SEQPOSE_LOSSES_LOSSES_H_
