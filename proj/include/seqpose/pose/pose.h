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

#ifndef SEQPOSE_POSE_POSE_H_
#define SEQPOSE_POSE_POSE_H_

#include <vector>

#include "Eigen/Core"

namespace seqpose {

using Vector6d = Eigen::Matrix<double, 6, 1>;

// Unit quaternion (Hamilton convention) kept on the w >= 0 hemisphere. When
// w == 0 the first nonzero of (x, y, z) is made positive.
class UnitQuaternion {
 public:
  UnitQuaternion() = default;

  // Normalizes and canonicalizes. Throws Error(kZeroQuaternion) when the norm
  // is <= 1e-12.
  static UnitQuaternion FromRaw(double w, double x, double y, double z);
  static UnitQuaternion FromRaw(const Eigen::Vector4d& wxyz);
  static UnitQuaternion Identity() { return UnitQuaternion(); }
  // Rotation of `angle` radians about `axis` (need not be unit length).
  static UnitQuaternion FromAxisAngle(const Eigen::Vector3d& axis,
                                      double angle);

  double w() const { return w_; }
  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }
  Eigen::Vector3d vec() const { return {x_, y_, z_}; }
  Eigen::Vector4d wxyz() const { return {w_, x_, y_, z_}; }

  UnitQuaternion Conjugate() const;
  Eigen::Matrix3d ToRotationMatrix() const;
  Eigen::Vector3d Rotate(const Eigen::Vector3d& v) const;

 private:
  double w_ = 1.0;
  double x_ = 0.0;
  double y_ = 0.0;
  double z_ = 0.0;
};

// Alias for the documented op name.
inline UnitQuaternion QuatNormalize(const Eigen::Vector4d& wxyz) {
  return UnitQuaternion::FromRaw(wxyz);
}

// Flips the sign of a raw 4-vector onto the canonical hemisphere without
// normalizing. Returns the sign that was applied (+1 or -1).
double CanonicalSign(const Eigen::Vector4d& wxyz);

// Hamilton product on raw 4-vectors (w, x, y, z).
Eigen::Vector4d QuatMultiply(const Eigen::Vector4d& a, const Eigen::Vector4d& b);

// Log-quaternion 3-vector: u * theta / 2 for a rotation of theta about u.
struct LogRotation {
  Eigen::Vector3d v = Eigen::Vector3d::Zero();
};

LogRotation QuatLog(const UnitQuaternion& q);
UnitQuaternion QuatExp(const LogRotation& v);

// World-from-camera rigid transform. Compose(a, b) applies b first, then a,
// so Compose(relative, pose_i) is the predicted pose_{i+1}.
struct PoseSE3 {
  Eigen::Vector3d t = Eigen::Vector3d::Zero();
  UnitQuaternion q;

  static PoseSE3 Identity() { return {}; }
};

PoseSE3 Compose(const PoseSE3& a, const PoseSE3& b);
PoseSE3 Inverse(const PoseSE3& p);
// r such that Compose(r, from) == to.
PoseSE3 RelativeBetween(const PoseSE3& from, const PoseSE3& to);

Eigen::Matrix4d ToMatrix(const PoseSE3& p);

// Geodesic angle (radians) between two rotations, 2 acos |<a, b>|.
double RotationAngle(const UnitQuaternion& a, const UnitQuaternion& b);

// q * exp(delta): right-multiplied local increment in log-quaternion
// coordinates, renormalized.
UnitQuaternion RetractRight(const UnitQuaternion& q, const Eigen::Vector3d& delta);
// (t + dt, q * exp(dw)) for a 6-vector [dt; dw].
PoseSE3 Retract(const PoseSE3& p, const Vector6d& delta);

}  // namespace seqpose

#endif  // SEQPOSE_POSE_POSE_H_
