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

#include "seqpose/pose/pose.h"

#include <algorithm>
#include <cmath>

#include "Eigen/Geometry"
#include "seqpose/common/error.h"

namespace seqpose {
namespace {

constexpr double kMinQuaternionNorm = 1e-12;
constexpr double kSeriesThreshold = 1e-8;
constexpr double kUnitSlack = 0x1.0p-50;

}  // namespace

double CanonicalSign(const Eigen::Vector4d& wxyz) {
  for (int i = 0; i < 4; ++i) {
    if (wxyz[i] > 0.0) return 1.0;
    if (wxyz[i] < 0.0) return -1.0;
  }
  return 1.0;
}

UnitQuaternion UnitQuaternion::FromRaw(const Eigen::Vector4d& wxyz) {
  const double norm = wxyz.norm();
  if (!(norm > kMinQuaternionNorm)) {
    throw Error(ErrorCode::kZeroQuaternion,
                "quaternion norm " + std::to_string(norm) + " <= 1e-12");
  }
  // Already-unit input is only sign-flipped, so FromRaw is idempotent bitwise.
  const double scale = std::abs(norm - 1.0) <= kUnitSlack ? 1.0 : 1.0 / norm;
  const Eigen::Vector4d unit = (CanonicalSign(wxyz) * scale) * wxyz;
  UnitQuaternion q;
  q.w_ = unit[0];
  q.x_ = unit[1];
  q.y_ = unit[2];
  q.z_ = unit[3];
  return q;
}

UnitQuaternion UnitQuaternion::FromRaw(double w, double x, double y, double z) {
  return FromRaw(Eigen::Vector4d(w, x, y, z));
}

UnitQuaternion UnitQuaternion::FromAxisAngle(const Eigen::Vector3d& axis,
                                             double angle) {
  const double n = axis.norm();
  if (n == 0.0 || angle == 0.0) return Identity();
  return QuatExp(LogRotation{axis * (0.5 * angle / n)});
}

UnitQuaternion UnitQuaternion::Conjugate() const {
  return FromRaw(w_, -x_, -y_, -z_);
}

Eigen::Matrix3d UnitQuaternion::ToRotationMatrix() const {
  return Eigen::Quaterniond(w_, x_, y_, z_).toRotationMatrix();
}

Eigen::Vector3d UnitQuaternion::Rotate(const Eigen::Vector3d& v) const {
  // v + 2 u x (u x v + w v), u the vector part.
  const Eigen::Vector3d u = vec();
  const Eigen::Vector3d uv = u.cross(v) + w_ * v;
  return v + 2.0 * u.cross(uv);
}

Eigen::Vector4d QuatMultiply(const Eigen::Vector4d& a, const Eigen::Vector4d& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

LogRotation QuatLog(const UnitQuaternion& q) {
  const Eigen::Vector3d u = q.vec();
  const double n = u.norm();
  if (n < kSeriesThreshold) {
    // atan2(n, w) / n with w = sqrt(1 - n^2): 1 + n^2 / 6 + 3 n^4 / 40.
    const double n2 = n * n;
    return {u * (1.0 + n2 / 6.0 + 3.0 * n2 * n2 / 40.0)};
  }
  // w >= 0 on the canonical hemisphere, so the half angle is in [0, pi/2].
  return {u * (std::atan2(n, q.w()) / n)};
}

UnitQuaternion QuatExp(const LogRotation& log) {
  const double n = log.v.norm();
  double sinc;
  if (n < kSeriesThreshold) {
    const double n2 = n * n;
    sinc = 1.0 - n2 / 6.0 + n2 * n2 / 120.0;
  } else {
    sinc = std::sin(n) / n;
  }
  const Eigen::Vector3d u = sinc * log.v;
  return UnitQuaternion::FromRaw(std::cos(n), u.x(), u.y(), u.z());
}

PoseSE3 Compose(const PoseSE3& a, const PoseSE3& b) {
  return {a.t + a.q.Rotate(b.t),
          UnitQuaternion::FromRaw(QuatMultiply(a.q.wxyz(), b.q.wxyz()))};
}

PoseSE3 Inverse(const PoseSE3& p) {
  const UnitQuaternion inv = p.q.Conjugate();
  return {-inv.Rotate(p.t), inv};
}

PoseSE3 RelativeBetween(const PoseSE3& from, const PoseSE3& to) {
  return Compose(to, Inverse(from));
}

Eigen::Matrix4d ToMatrix(const PoseSE3& p) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.topLeftCorner<3, 3>() = p.q.ToRotationMatrix();
  m.topRightCorner<3, 1>() = p.t;
  return m;
}

double RotationAngle(const UnitQuaternion& a, const UnitQuaternion& b) {
  // 2 acos |<a, b>| evaluated as 2 atan2(|vec(a* b)|, |w(a* b)|), which is
  // exactly zero for a == b and well conditioned near identity.
  // vec(a* b) = a.w b.v - b.w a.v - a.v x b.v, grouped so every pair
  // cancels exactly when a == b.
  const Eigen::Vector3d u = a.vec(), v = b.vec();
  const Eigen::Vector3d d(
      (a.w() * v.x() - b.w() * u.x()) - (u.y() * v.z() - u.z() * v.y()),
      (a.w() * v.y() - b.w() * u.y()) - (u.z() * v.x() - u.x() * v.z()),
      (a.w() * v.z() - b.w() * u.z()) - (u.x() * v.y() - u.y() * v.x()));
  const double w = a.w() * b.w() + u.dot(v);
  return 2.0 * std::atan2(d.norm(), std::abs(w));
}

UnitQuaternion RetractRight(const UnitQuaternion& q,
                            const Eigen::Vector3d& delta) {
  return UnitQuaternion::FromRaw(
      QuatMultiply(q.wxyz(), QuatExp(LogRotation{delta}).wxyz()));
}

PoseSE3 Retract(const PoseSE3& p, const Vector6d& delta) {
  return {p.t + delta.head<3>(), RetractRight(p.q, delta.tail<3>())};
}

}  // namespace seqpose
