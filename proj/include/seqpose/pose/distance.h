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

#ifndef SEQPOSE_POSE_DISTANCE_H_
#define SEQPOSE_POSE_DISTANCE_H_

#include "Eigen/Core"
#include "seqpose/pose/pose.h"

namespace seqpose {

// Learnable balance scalars of the weighted L1 pose distance. The translation
// term is scaled by exp(-beta), the rotation term by exp(-gamma), and both
// scalars are added back so they cannot run off to +infinity.
struct LossWeights {
  double beta = -3.0;
  double gamma = 0.0;

  static LossWeights Zero() { return {0.0, 0.0}; }
};

enum class L1Mode {
  kExact,
  // |x| ~ sqrt(x^2 + eps^2) - eps. Same gradient as sqrt(x^2 + eps^2) but
  // keeps the per-term floor at exactly beta + gamma.
  kSmoothed,
};

struct L1Options {
  L1Mode mode = L1Mode::kExact;
  double smoothing_eps = 1e-6;

  static L1Options Exact() { return {}; }
  static L1Options Smoothed(double eps = 1e-6) { return {L1Mode::kSmoothed, eps}; }
};

// |t_hat - t|_1 exp(-beta) + beta + |w_hat - w|_1 exp(-gamma) + gamma, with w
// the log quaternion of the canonicalized rotation.
double PoseDistance(const PoseSE3& p_hat, const PoseSE3& p,
                    const LossWeights& weights, const L1Options& l1 = {});

// Gradient of PoseDistance. Rotation gradients are taken w.r.t. the
// log-quaternion coordinates of each pose (q = QuatExp(w)).
struct PoseDistanceGradient {
  Eigen::Vector3d d_t_hat = Eigen::Vector3d::Zero();
  Eigen::Vector3d d_w_hat = Eigen::Vector3d::Zero();
  Eigen::Vector3d d_t = Eigen::Vector3d::Zero();
  Eigen::Vector3d d_w = Eigen::Vector3d::Zero();
  double d_beta = 0.0;
  double d_gamma = 0.0;
  // Exact mode only: some residual component is within 1e-9 of zero, where
  // the returned entry is a subgradient (0).
  bool non_smooth = false;
};

PoseDistanceGradient PoseDistanceGrad(const PoseSE3& p_hat, const PoseSE3& p,
                                      const LossWeights& weights,
                                      const L1Options& l1 = {});

// Local-coordinate machinery shared by the loss and pose-graph gradients.
// A pose is perturbed as (t + dt, q * exp(dw)); gradients are 6-vectors
// [d/dt; d/dw].
namespace jacobians {

// Gradient w.r.t. a pose expressed in ambient coordinates: translation and
// the raw 4-vector quaternion (w, x, y, z).
struct AmbientGradient {
  Eigen::Vector3d t = Eigen::Vector3d::Zero();
  Eigen::Vector4d q = Eigen::Vector4d::Zero();
};

struct DistanceEval {
  double value = 0.0;
  AmbientGradient p_hat;
  AmbientGradient p;
  double d_beta = 0.0;
  double d_gamma = 0.0;
  bool non_smooth = false;
};

DistanceEval EvaluateDistance(const PoseSE3& p_hat, const PoseSE3& p,
                              const LossWeights& weights, const L1Options& l1);

// d log(canonical(q)) / dq at a unit quaternion q (3x4).
Eigen::Matrix<double, 3, 4> LogJacobian(const Eigen::Vector4d& q);

// d (q * exp(delta)) / d delta at delta = 0 (4x3).
Eigen::Matrix<double, 4, 3> RightTangent(const Eigen::Vector4d& q);

Vector6d ToLocal(const PoseSE3& p, const AmbientGradient& g);

// Given the ambient gradient at c = Compose(a, b), accumulates the local
// gradients of a and b into `g_a` and `g_b` (either may be null).
void ComposePullback(const PoseSE3& a, const PoseSE3& b,
                     const AmbientGradient& g_c, Vector6d* g_a, Vector6d* g_b);

}  // namespace jacobians
}  // namespace seqpose

#endif  // SEQPOSE_POSE_DISTANCE_H_
