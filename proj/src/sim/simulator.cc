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

#include "seqpose/sim/simulator.h"

#include <cmath>
#include <numbers>

#include "seqpose/common/error.h"
#include "seqpose/common/rng.h"

namespace seqpose {
namespace {

constexpr uint64_t kTrajectoryStream = 1;
constexpr uint64_t kGlobalStream = 2;
constexpr uint64_t kVoStream = 3;
constexpr uint64_t kFeatureStream = 4;

double DegToRad(double deg) { return deg * std::numbers::pi / 180.0; }

// Translation noise, then a rotation of Normal(0, r_sigma) degrees about a
// uniform axis. Always consumes seven normals.
PoseSE3 Perturb(const PoseSE3& p, double t_sigma, double r_sigma_deg, Rng& rng) {
  Eigen::Vector3d dt;
  dt.x() = rng.Normal(0.0, t_sigma);
  dt.y() = rng.Normal(0.0, t_sigma);
  dt.z() = rng.Normal(0.0, t_sigma);
  const Eigen::Vector3d axis = rng.UnitVector();
  const double angle = rng.Normal(0.0, DegToRad(r_sigma_deg));
  PoseSE3 out;
  out.t = p.t + dt;
  out.q = angle == 0.0
              ? p.q
              : UnitQuaternion::FromRaw(QuatMultiply(
                    p.q.wxyz(), UnitQuaternion::FromAxisAngle(axis, angle).wxyz()));
  return out;
}

}  // namespace

void SimConfig::Validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, what);
  };
  if (n_frames < 2) fail("n_frames must be >= 2");
  if (step_mean < 0.0 || step_jitter < 0.0 || step_jitter > 1.0) {
    fail("step_mean must be >= 0 and step_jitter in [0, 1]");
  }
  for (double s : {turn_sigma, global_t_sigma, global_r_sigma, outlier_t,
                   vo_t_sigma, vo_r_sigma}) {
    if (!(s >= 0.0) || !std::isfinite(s)) fail("sigmas must be finite and >= 0");
  }
  if (!(outlier_rate >= 0.0 && outlier_rate <= 1.0)) {
    fail("outlier_rate must lie in [0, 1]");
  }
  if (!(covis_overlap >= 0.0 && covis_overlap <= 1.0)) {
    fail("covis_overlap must lie in [0, 1]");
  }
  if (feat_dims.h <= 0 || feat_dims.w <= 0 || feat_dims.c <= 0) {
    fail("feature dims must be positive");
  }
}

std::vector<PoseSE3> SimulateTrajectory(const SimConfig& cfg) {
  cfg.Validate();
  Rng rng = Rng::ForStream(cfg.seed, kTrajectoryStream);
  const double turn = DegToRad(cfg.turn_sigma);
  std::vector<PoseSE3> poses;
  poses.reserve(cfg.n_frames);

  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  double heading = 0.0;
  for (int k = 0; k < cfg.n_frames; ++k) {
    if (k > 0) {
      const double step =
          cfg.step_mean * rng.Uniform(1.0 - cfg.step_jitter, 1.0 + cfg.step_jitter);
      position += step * Eigen::Vector3d(std::cos(heading), std::sin(heading), 0.0);
      heading += rng.Normal(0.0, turn);
    }
    const double pitch = rng.Normal(0.0, 0.25 * turn);
    const UnitQuaternion yaw_q =
        UnitQuaternion::FromAxisAngle(Eigen::Vector3d::UnitZ(), heading);
    const UnitQuaternion pitch_q =
        UnitQuaternion::FromAxisAngle(Eigen::Vector3d::UnitY(), pitch);
    poses.push_back(
        {position, UnitQuaternion::FromRaw(QuatMultiply(yaw_q.wxyz(), pitch_q.wxyz()))});
  }
  return poses;
}

GlobalMeasurements CorruptGlobal(const std::vector<PoseSE3>& gt,
                                 const SimConfig& cfg) {
  Rng rng = Rng::ForStream(cfg.seed, kGlobalStream);
  GlobalMeasurements out;
  for (const PoseSE3& p : gt) {
    PoseSE3 meas = Perturb(p, cfg.global_t_sigma, cfg.global_r_sigma, rng);
    const bool outlier = rng.Uniform() < cfg.outlier_rate;
    const Eigen::Vector3d jump = rng.UnitVector() * cfg.outlier_t;
    if (outlier) meas.t += jump;
    out.poses.push_back(meas);
    out.outlier_mask.push_back(outlier);
  }
  return out;
}

std::vector<PoseSE3> CorruptVo(const std::vector<PoseSE3>& gt,
                               const SimConfig& cfg) {
  Rng rng = Rng::ForStream(cfg.seed, kVoStream);
  std::vector<PoseSE3> edges;
  for (size_t k = 0; k + 1 < gt.size(); ++k) {
    edges.push_back(Perturb(RelativeBetween(gt[k], gt[k + 1]), cfg.vo_t_sigma,
                            cfg.vo_r_sigma, rng));
  }
  return edges;
}

std::vector<FeatureTensor> SynthFeatures(const std::vector<PoseSE3>& gt,
                                         const SimConfig& cfg) {
  Rng rng = Rng::ForStream(cfg.seed, kFeatureStream);
  const TensorShape shape = cfg.feat_dims;
  std::vector<double> landmark(shape.size());
  for (double& v : landmark) v = rng.Normal();

  const double overlap = cfg.covis_overlap;
  const size_t pixels = static_cast<size_t>(shape.h) * shape.w;
  std::vector<FeatureTensor> features;
  for (size_t k = 0; k < gt.size(); ++k) {
    std::vector<double> data(shape.size());
    for (size_t i = 0; i < data.size(); ++i) {
      data[i] = overlap * landmark[i] + (1.0 - overlap) * rng.Normal();
    }
    for (int j = 0; j < shape.c; ++j) {
      double sq = 0.0;
      for (size_t p = 0; p < pixels; ++p) sq += data[p * shape.c + j] * data[p * shape.c + j];
      const double rms = std::sqrt(sq / static_cast<double>(pixels));
      if (rms == 0.0) continue;
      for (size_t p = 0; p < pixels; ++p) data[p * shape.c + j] /= rms;
    }
    features.emplace_back(shape, std::move(data));
  }
  return features;
}

SimOutput Simulate(const SimConfig& cfg) {
  SimOutput out;
  out.gt = SimulateTrajectory(cfg);
  GlobalMeasurements global = CorruptGlobal(out.gt, cfg);
  out.global_meas = std::move(global.poses);
  out.outlier_mask = std::move(global.outlier_mask);
  out.vo_meas = CorruptVo(out.gt, cfg);
  out.features = SynthFeatures(out.gt, cfg);
  return out;
}

}  // namespace seqpose
