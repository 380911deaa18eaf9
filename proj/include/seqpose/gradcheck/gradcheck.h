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

#ifndef SEQPOSE_GRADCHECK_GRADCHECK_H_
#define SEQPOSE_GRADCHECK_GRADCHECK_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "Eigen/Core"
#include "seqpose/common/rng.h"
#include "seqpose/losses/losses.h"
#include "seqpose/pose/pose.h"
#include "seqpose/pose_graph/pose_graph.h"

namespace seqpose::gradcheck {

// |analytic - numeric| / max(1, |analytic|, |numeric|).
double RelativeError(double analytic, double numeric);

// Central difference (f(x + h e_k) - f(x - h e_k)) / 2h for every k, where
// `eval(k, delta)` evaluates the function with coordinate k moved by delta.
Eigen::VectorXd CentralDifferences(
    int dims, double step, const std::function<double(int, double)>& eval);

struct Options {
  uint64_t seed = 20240607;
  double step = 1e-6;
  double tolerance = 1e-6;
  int distance_points = 100;
  int loss_points = 50;
  int pgo_points = 50;
  // Test fixture: flips the sign of one analytic component so the harness
  // can be shown to catch a wrong gradient.
  bool inject_sign_bug = false;
};

struct SuiteResult {
  std::string name;
  int points = 0;
  double max_rel_error = 0.0;
  bool passed = false;
};

// Pose distance w.r.t. (t_hat, w_hat, t, w, beta, gamma), exact L1, with
// rotations in log-quaternion coordinates.
SuiteResult CheckDistance(const Options& options);
// Total loss w.r.t. all predicted poses (local coordinates) and the six
// balance scalars, smoothed L1.
SuiteResult CheckLosses(const Options& options);
// Pose-graph objective w.r.t. every candidate node, smoothed L1.
SuiteResult CheckPgo(const Options& options);

std::vector<std::string> SuiteNames();
SuiteResult RunSuite(const std::string& name, const Options& options);

// Random pose with translation in [-t_range, t_range]^3 and a log rotation
// of norm at most rot_range.
PoseSE3 RandomPose(Rng& rng, double t_range, double rot_range);
// Smallest absolute residual component (translation or log rotation) between
// two poses; gradient checks skip points where this is near zero.
double MinResidual(const PoseSE3& a, const PoseSE3& b);

}  // namespace seqpose::gradcheck

#endif  // SEQPOSE_GRADCHECK_GRADCHECK_H_
