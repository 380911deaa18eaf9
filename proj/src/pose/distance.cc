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

#include "seqpose/pose/distance.h"

#include <cmath>

#include "Eigen/Geometry"

namespace seqpose {
namespace {

constexpr double kKinkTolerance = 1e-9;
constexpr double kSeriesThreshold = 1e-8;

struct L1Term {
  double value = 0.0;
  Eigen::Vector3d slope = Eigen::Vector3d::Zero();  // d value / d residual
  bool non_smooth = false;
};

L1Term EvaluateL1(const Eigen::Vector3d& r, const L1Options& l1) {
  L1Term term;
  for (int i = 0; i < 3; ++i) {
    const double x = r[i];
    if (l1.mode == L1Mode::kExact) {
      term.value += std::abs(x);
      term.slope[i] = x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
      if (std::abs(x) < kKinkTolerance) term.non_smooth = true;
    } else {
      const double eps = l1.smoothing_eps;
      const double root = std::sqrt(x * x + eps * eps);
      term.value += root - eps;
      term.slope[i] = x / root;
    }
  }
  return term;
}

Eigen::Matrix3d Skew(const Eigen::Vector3d& v) {
  Eigen::Matrix3d m;
  m << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
  return m;
}

// Left and right Hamilton-product matrices: a * b = Left(a) b = Right(b) a.
Eigen::Matrix4d LeftProduct(const Eigen::Vector4d& a) {
  Eigen::Matrix4d m;
  m << a[0], -a[1], -a[2], -a[3],
       a[1], a[0], -a[3], a[2],
       a[2], a[3], a[0], -a[1],
       a[3], -a[2], a[1], a[0];
  return m;
}

Eigen::Matrix4d RightProduct(const Eigen::Vector4d& b) {
  Eigen::Matrix4d m;
  m << b[0], -b[1], -b[2], -b[3],
       b[1], b[0], b[3], -b[2],
       b[2], -b[3], b[0], b[1],
       b[3], b[2], -b[1], b[0];
  return m;
}

Eigen::Matrix<double, 4, 3> PureBasis() {
  Eigen::Matrix<double, 4, 3> e = Eigen::Matrix<double, 4, 3>::Zero();
  e.bottomRows<3>().setIdentity();
  return e;
}

}  // namespace

namespace jacobians {

Eigen::Matrix<double, 3, 4> LogJacobian(const Eigen::Vector4d& q_raw) {
  const double sign = CanonicalSign(q_raw);
  const Eigen::Vector4d q = sign * q_raw;
  const double w = q[0];
  const Eigen::Vector3d u = q.tail<3>();
  const double n = u.norm();
  const double d = n * n + w * w;

  // log = u * phi / n with phi = atan2(n, w).
  double ratio;  // phi / n
  double coeff;  // d(phi / n) / dn / n
  if (n < kSeriesThreshold) {
    ratio = 1.0 / w;
    coeff = -2.0 / 3.0;
  } else {
    const double phi = std::atan2(n, w);
    ratio = phi / n;
    coeff = (w * n / d - phi) / (n * n * n);
  }
  Eigen::Matrix<double, 3, 4> jac;
  jac.col(0) = -u / d;
  jac.rightCols<3>() =
      ratio * Eigen::Matrix3d::Identity() + coeff * u * u.transpose();
  return sign * jac;
}

Eigen::Matrix<double, 4, 3> RightTangent(const Eigen::Vector4d& q) {
  return LeftProduct(q) * PureBasis();
}

Vector6d ToLocal(const PoseSE3& p, const AmbientGradient& g) {
  Vector6d out;
  out.head<3>() = g.t;
  out.tail<3>() = RightTangent(p.q.wxyz()).transpose() * g.q;
  return out;
}

DistanceEval EvaluateDistance(const PoseSE3& p_hat, const PoseSE3& p,
                              const LossWeights& weights, const L1Options& l1) {
  const Eigen::Vector3d w_hat = QuatLog(p_hat.q).v;
  const Eigen::Vector3d w = QuatLog(p.q).v;
  const L1Term trans = EvaluateL1(p_hat.t - p.t, l1);
  const L1Term rot = EvaluateL1(w_hat - w, l1);
  const double scale_t = std::exp(-weights.beta);
  const double scale_r = std::exp(-weights.gamma);

  DistanceEval eval;
  eval.value = trans.value * scale_t + weights.beta + rot.value * scale_r +
               weights.gamma;
  eval.d_beta = 1.0 - trans.value * scale_t;
  eval.d_gamma = 1.0 - rot.value * scale_r;
  eval.non_smooth = trans.non_smooth || rot.non_smooth;

  const Eigen::Vector3d g_t = scale_t * trans.slope;
  const Eigen::Vector3d g_w = scale_r * rot.slope;
  eval.p_hat.t = g_t;
  eval.p.t = -g_t;
  eval.p_hat.q = LogJacobian(p_hat.q.wxyz()).transpose() * g_w;
  eval.p.q = -LogJacobian(p.q.wxyz()).transpose() * g_w;
  return eval;
}

void ComposePullback(const PoseSE3& a, const PoseSE3& b,
                     const AmbientGradient& g_c, Vector6d* g_a, Vector6d* g_b) {
  const Eigen::Vector4d qa = a.q.wxyz();
  const Eigen::Vector4d qb = b.q.wxyz();
  // Compose canonicalizes the product; undo that sign for the raw product.
  const double sign = CanonicalSign(QuatMultiply(qa, qb));
  const Eigen::Vector4d g_prod = sign * g_c.q;
  const Eigen::Matrix3d rot_a = a.q.ToRotationMatrix();

  if (g_a != nullptr) {
    // d(qa exp(d) qb)/dd = Left(qa) Right(qb) E.
    const Eigen::Matrix<double, 4, 3> dq =
        LeftProduct(qa) * RightProduct(qb) * PureBasis();
    // R(qa exp(d)) tb ~ R(qa)(tb + 2 d x tb).
    const Eigen::Matrix3d dt = -2.0 * rot_a * Skew(b.t);
    g_a->head<3>() += g_c.t;
    g_a->tail<3>() += dq.transpose() * g_prod + dt.transpose() * g_c.t;
  }
  if (g_b != nullptr) {
    const Eigen::Matrix<double, 4, 3> dq =
        LeftProduct(QuatMultiply(qa, qb)) * PureBasis();
    g_b->head<3>() += rot_a.transpose() * g_c.t;
    g_b->tail<3>() += dq.transpose() * g_prod;
  }
}

}  // namespace jacobians

double PoseDistance(const PoseSE3& p_hat, const PoseSE3& p,
                    const LossWeights& weights, const L1Options& l1) {
  const L1Term trans = EvaluateL1(p_hat.t - p.t, l1);
  const L1Term rot = EvaluateL1(QuatLog(p_hat.q).v - QuatLog(p.q).v, l1);
  return trans.value * std::exp(-weights.beta) + weights.beta +
         rot.value * std::exp(-weights.gamma) + weights.gamma;
}

PoseDistanceGradient PoseDistanceGrad(const PoseSE3& p_hat, const PoseSE3& p,
                                      const LossWeights& weights,
                                      const L1Options& l1) {
  const L1Term trans = EvaluateL1(p_hat.t - p.t, l1);
  const L1Term rot = EvaluateL1(QuatLog(p_hat.q).v - QuatLog(p.q).v, l1);
  const double scale_t = std::exp(-weights.beta);
  const double scale_r = std::exp(-weights.gamma);

  PoseDistanceGradient grad;
  grad.d_t_hat = scale_t * trans.slope;
  grad.d_t = -grad.d_t_hat;
  grad.d_w_hat = scale_r * rot.slope;
  grad.d_w = -grad.d_w_hat;
  grad.d_beta = 1.0 - trans.value * scale_t;
  grad.d_gamma = 1.0 - rot.value * scale_r;
  grad.non_smooth = trans.non_smooth || rot.non_smooth;
  return grad;
}

}  // namespace seqpose
