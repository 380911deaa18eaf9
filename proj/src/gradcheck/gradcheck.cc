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

#include "seqpose/gradcheck/gradcheck.h"

#include <algorithm>
#include <cmath>

#include "seqpose/common/error.h"
#include "seqpose/pose/distance.h"

namespace seqpose::gradcheck {
namespace {

constexpr double kMinResidual = 1e-3;

Vector6d Unit6(int k, double delta) {
  Vector6d v = Vector6d::Zero();
  v[k] = delta;
  return v;
}

SuiteResult Finish(std::string name, int points, double max_err,
                   const Options& options) {
  return {std::move(name), points, max_err, max_err < options.tolerance};
}

double MaxError(const Eigen::VectorXd& analytic, const Eigen::VectorXd& numeric) {
  double worst = 0.0;
  for (Eigen::Index k = 0; k < analytic.size(); ++k) {
    worst = std::max(worst, RelativeError(analytic[k], numeric[k]));
  }
  return worst;
}

}  // namespace

double RelativeError(double analytic, double numeric) {
  const double scale = std::max({1.0, std::abs(analytic), std::abs(numeric)});
  return std::abs(analytic - numeric) / scale;
}

Eigen::VectorXd CentralDifferences(
    int dims, double step, const std::function<double(int, double)>& eval) {
  Eigen::VectorXd g(dims);
  for (int k = 0; k < dims; ++k) {
    g[k] = (eval(k, step) - eval(k, -step)) / (2.0 * step);
  }
  return g;
}

PoseSE3 RandomPose(Rng& rng, double t_range, double rot_range) {
  PoseSE3 p;
  p.t = Eigen::Vector3d(rng.Uniform(-t_range, t_range),
                        rng.Uniform(-t_range, t_range),
                        rng.Uniform(-t_range, t_range));
  p.q = QuatExp(LogRotation{rng.UnitVector() * rng.Uniform(0.0, rot_range)});
  return p;
}

double MinResidual(const PoseSE3& a, const PoseSE3& b) {
  const Eigen::Vector3d dt = (a.t - b.t).cwiseAbs();
  const Eigen::Vector3d dw = (QuatLog(a.q).v - QuatLog(b.q).v).cwiseAbs();
  return std::min(dt.minCoeff(), dw.minCoeff());
}

SuiteResult CheckDistance(const Options& options) {
  Rng rng = Rng::ForStream(options.seed, 101);
  double worst = 0.0;
  int points = 0;
  while (points < options.distance_points) {
    const PoseSE3 p_hat = RandomPose(rng, 2.0, 0.7);
    const PoseSE3 p = RandomPose(rng, 2.0, 0.7);
    if (MinResidual(p_hat, p) < kMinResidual) continue;
    const LossWeights weights{rng.Uniform(-4.0, 2.0), rng.Uniform(-2.0, 2.0)};
    const Eigen::Vector3d w_hat = QuatLog(p_hat.q).v;
    const Eigen::Vector3d w = QuatLog(p.q).v;

    const PoseDistanceGradient grad = PoseDistanceGrad(p_hat, p, weights);
    Eigen::VectorXd analytic(14);
    analytic << grad.d_t_hat, grad.d_w_hat, grad.d_t, grad.d_w, grad.d_beta,
        grad.d_gamma;
    if (options.inject_sign_bug) analytic[0] = -analytic[0];

    const Eigen::VectorXd numeric =
        CentralDifferences(14, options.step, [&](int k, double delta) {
          Eigen::Matrix<double, 14, 1> x;
          x << p_hat.t, w_hat, p.t, w, weights.beta, weights.gamma;
          x[k] += delta;
          const PoseSE3 a{x.segment<3>(0), QuatExp(LogRotation{x.segment<3>(3)})};
          const PoseSE3 b{x.segment<3>(6), QuatExp(LogRotation{x.segment<3>(9)})};
          return PoseDistance(a, b, LossWeights{x[12], x[13]});
        });
    worst = std::max(worst, MaxError(analytic, numeric));
    ++points;
  }
  return Finish("distance", points, worst, options);
}

SuiteResult CheckLosses(const Options& options) {
  Rng rng = Rng::ForStream(options.seed, 102);
  const L1Options l1 = L1Options::Smoothed();
  double worst = 0.0;
  int points = 0;
  while (points < options.loss_points) {
    const int n = 2 + static_cast<int>(rng.Next() % 5);
    SequenceSample s;
    for (int i = 0; i < n; ++i) {
      s.global_pred.push_back(RandomPose(rng, 1.0, 0.5));
      s.global_gt.push_back(RandomPose(rng, 1.0, 0.5));
    }
    for (int k = 0; k + 1 < n; ++k) {
      s.vo_pred.push_back(RandomPose(rng, 0.5, 0.4));
      s.vo_gt.push_back(RandomPose(rng, 0.5, 0.4));
    }
    LossBundle bundle;
    for (LossWeights* w : {&bundle.weights_g, &bundle.weights_vo,
                           &bundle.weights_joint}) {
      *w = {rng.Uniform(-4.0, 1.0), rng.Uniform(-2.0, 2.0)};
    }

    double min_residual = 1e300;
    for (int i = 0; i < n; ++i) {
      min_residual = std::min(min_residual, MinResidual(s.global_gt[i], s.global_pred[i]));
    }
    for (int k = 0; k + 1 < n; ++k) {
      min_residual = std::min(min_residual, MinResidual(s.vo_gt[k], s.vo_pred[k]));
      min_residual = std::min(
          min_residual, MinResidual(s.global_pred[k + 1],
                                    Compose(s.vo_pred[k], s.global_pred[k])));
    }
    if (min_residual < kMinResidual) continue;

    const LossGradient grad = LossGrad(s, bundle, l1);
    const int dims = 6 * n + 6 * (n - 1) + 6;
    Eigen::VectorXd analytic(dims);
    int offset = 0;
    for (const auto& g : grad.global_pred) analytic.segment<6>(offset) = g, offset += 6;
    for (const auto& g : grad.vo_pred) analytic.segment<6>(offset) = g, offset += 6;
    analytic.tail<6>() << grad.weights_g.d_beta, grad.weights_g.d_gamma,
        grad.weights_vo.d_beta, grad.weights_vo.d_gamma,
        grad.weights_joint.d_beta, grad.weights_joint.d_gamma;
    if (options.inject_sign_bug) analytic[0] = -analytic[0];

    const Eigen::VectorXd numeric =
        CentralDifferences(dims, options.step, [&](int k, double delta) {
          SequenceSample moved = s;
          LossBundle b = bundle;
          if (k < 6 * n) {
            moved.global_pred[k / 6] = Retract(s.global_pred[k / 6], Unit6(k % 6, delta));
          } else if (k < 6 * n + 6 * (n - 1)) {
            const int j = k - 6 * n;
            moved.vo_pred[j / 6] = Retract(s.vo_pred[j / 6], Unit6(j % 6, delta));
          } else {
            const int j = k - 6 * n - 6 * (n - 1);
            LossWeights* targets[] = {&b.weights_g, &b.weights_vo, &b.weights_joint};
            double& field = j % 2 == 0 ? targets[j / 2]->beta : targets[j / 2]->gamma;
            field += delta;
          }
          return LossTotal(moved, b, l1);
        });
    worst = std::max(worst, MaxError(analytic, numeric));
    ++points;
  }
  return Finish("losses", points, worst, options);
}

SuiteResult CheckPgo(const Options& options) {
  Rng rng = Rng::ForStream(options.seed, 103);
  const L1Options l1 = L1Options::Smoothed();
  double worst = 0.0;
  int points = 0;
  while (points < options.pgo_points) {
    const int n = 2 + static_cast<int>(rng.Next() % 5);
    PoseGraph g;
    std::vector<PoseSE3> candidate;
    for (int i = 0; i < n; ++i) {
      g.priors.push_back(RandomPose(rng, 1.0, 0.5));
      candidate.push_back(RandomPose(rng, 1.0, 0.5));
    }
    for (int k = 0; k + 1 < n; ++k) g.edges.push_back(RandomPose(rng, 0.5, 0.4));
    g.alpha = rng.Uniform(0.1, 5.0);
    g.weights = {rng.Uniform(-4.0, 1.0), rng.Uniform(-2.0, 2.0)};

    double min_residual = 1e300;
    for (int i = 0; i < n; ++i) {
      min_residual = std::min(min_residual, MinResidual(g.priors[i], candidate[i]));
    }
    for (int k = 0; k + 1 < n; ++k) {
      min_residual = std::min(
          min_residual,
          MinResidual(candidate[k + 1], Compose(g.edges[k], candidate[k])));
    }
    if (min_residual < kMinResidual) continue;

    const std::vector<Vector6d> grad = PgoObjectiveGrad(g, candidate, l1);
    Eigen::VectorXd analytic(6 * n);
    for (int i = 0; i < n; ++i) analytic.segment<6>(6 * i) = grad[i];
    if (options.inject_sign_bug) analytic[0] = -analytic[0];

    const Eigen::VectorXd numeric =
        CentralDifferences(6 * n, options.step, [&](int k, double delta) {
          std::vector<PoseSE3> moved = candidate;
          moved[k / 6] = Retract(candidate[k / 6], Unit6(k % 6, delta));
          return PgoObjective(g, moved, l1);
        });
    worst = std::max(worst, MaxError(analytic, numeric));
    ++points;
  }
  return Finish("pgo", points, worst, options);
}

std::vector<std::string> SuiteNames() { return {"distance", "losses", "pgo"}; }

SuiteResult RunSuite(const std::string& name, const Options& options) {
  if (name == "distance") return CheckDistance(options);
  if (name == "losses") return CheckLosses(options);
  if (name == "pgo") return CheckPgo(options);
  throw Error(ErrorCode::kInvalidArgument, "unknown gradient suite: " + name);
}

}  // namespace seqpose::gradcheck
