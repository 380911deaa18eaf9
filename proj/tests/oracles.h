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

// Reference implementations used only by tests. Each one is written from the
// defining formula with plain loops and shares no code path with the library
// routine it checks.

#ifndef SEQPOSE_TESTS_ORACLES_H_
#define SEQPOSE_TESTS_ORACLES_H_

#include <cmath>
#include <functional>
#include <vector>

#include "Eigen/Core"
#include "seqpose/attention/feature_tensor.h"
#include "seqpose/pose/pose.h"
#include "seqpose/pose_graph/pose_graph.h"

namespace seqpose::oracle {

// 4x4 homogeneous matrix from the textbook quaternion-to-rotation formula.
inline Eigen::Matrix4d HomogeneousFromPose(const PoseSE3& p) {
  const double w = p.q.w(), x = p.q.x(), y = p.q.y(), z = p.q.z();
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m(0, 0) = 1 - 2 * (y * y + z * z);
  m(0, 1) = 2 * (x * y - w * z);
  m(0, 2) = 2 * (x * z + w * y);
  m(1, 0) = 2 * (x * y + w * z);
  m(1, 1) = 1 - 2 * (x * x + z * z);
  m(1, 2) = 2 * (y * z - w * x);
  m(2, 0) = 2 * (x * z - w * y);
  m(2, 1) = 2 * (y * z + w * x);
  m(2, 2) = 1 - 2 * (x * x + y * y);
  m(0, 3) = p.t.x();
  m(1, 3) = p.t.y();
  m(2, 3) = p.t.z();
  return m;
}

inline std::vector<double> Softmax(const std::vector<double>& s) {
  double peak = s[0];
  for (double v : s) peak = std::max(peak, v);
  std::vector<double> e(s.size());
  double total = 0.0;
  for (size_t i = 0; i < s.size(); ++i) {
    e[i] = std::exp(s[i] - peak);
    total += e[i];
  }
  for (double& v : e) v /= total;
  return e;
}

inline double Cosine(const std::vector<double>& a, const std::vector<double>& b) {
  double ab = 0.0, aa = 0.0, bb = 0.0;
  for (size_t k = 0; k < a.size(); ++k) {
    ab += a[k] * b[k];
    aa += a[k] * a[k];
    bb += b[k] * b[k];
  }
  if (aa == 0.0 || bb == 0.0) return 0.0;
  return ab / (std::sqrt(aa) * std::sqrt(bb));
}

inline std::vector<double> Channel(const FeatureTensor& t, int j) {
  std::vector<double> v;
  for (int y = 0; y < t.h(); ++y) {
    for (int x = 0; x < t.w(); ++x) v.push_back(t.at(y, x, j));
  }
  return v;
}

inline std::vector<double> Flat(const FeatureTensor& t) {
  return {t.data().begin(), t.data().end()};
}

struct NaiveAttention {
  std::vector<double> temporal;
  std::vector<std::vector<double>> spatial;
  FeatureTensor augmented;
};

// out[y, x, j] = sum_i A_T(i) * A_S(i, j) * H_i[y, x, j], softmax weights.
inline NaiveAttention ContentAugment(const FeatureTensor& x,
                                     const std::vector<FeatureTensor>& hs) {
  NaiveAttention r;
  std::vector<double> scores;
  for (const auto& h : hs) scores.push_back(Cosine(Flat(x), Flat(h)));
  r.temporal = Softmax(scores);
  for (const auto& h : hs) {
    std::vector<double> s;
    for (int j = 0; j < x.c(); ++j) s.push_back(Cosine(Channel(x, j), Channel(h, j)));
    r.spatial.push_back(Softmax(s));
  }
  r.augmented = FeatureTensor(x.shape());
  for (int yy = 0; yy < x.h(); ++yy) {
    for (int xx = 0; xx < x.w(); ++xx) {
      for (int j = 0; j < x.c(); ++j) {
        double sum = 0.0;
        for (size_t i = 0; i < hs.size(); ++i) {
          sum += r.temporal[i] * r.spatial[i][j] * hs[i].at(yy, xx, j);
        }
        r.augmented.at(yy, xx, j) = sum;
      }
    }
  }
  return r;
}

inline double Sigmoid(double v) { return 1.0 / (1.0 + std::exp(-v)); }

// Scalar LSTM cell; gates ordered input, forget, output, candidate.
struct ScalarLstm {
  double wx[4];
  double wh[4];
  double b[4];

  void Step(double x, double* h, double* c) const {
    const double i = Sigmoid(wx[0] * x + wh[0] * *h + b[0]);
    const double f = Sigmoid(wx[1] * x + wh[1] * *h + b[1]);
    const double o = Sigmoid(wx[2] * x + wh[2] * *h + b[2]);
    const double g = std::tanh(wx[3] * x + wh[3] * *h + b[3]);
    *c = f * *c + i * g;
    *h = o * std::tanh(*c);
  }
};

// Derivative-free minimizer of the smoothed pose-graph objective in the
// fixed chart x -> Retract(prior_i, x_i) (Powell's direction-set method).
// Each sweep runs a golden-section search along every direction of the set,
// starting from the 6N coordinate axes, then along the sweep's net
// displacement, which replaces the direction that gained most. Stops once a
// sweep over the plain axes improves the objective by at most
// tol * max(1, |f|). Uses objective values only.
inline double GoldenSection(const std::function<double(double)>& f, double scale) {
  const double f0 = f(0.0);
  double lo = -scale, hi = scale;
  while (f(hi) < f0 && hi < 1e3) hi *= 2.0;
  while (f(lo) < f0 && lo > -1e3) lo *= 2.0;
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - r * (hi - lo), d = lo + r * (hi - lo);
  double fc = f(c), fd = f(d);
  while (hi - lo > 1e-12 * scale) {
    if (fc < fd) {
      hi = d, d = c, fd = fc;
      c = hi - r * (hi - lo), fc = f(c);
    } else {
      lo = c, c = d, fc = fd;
      d = lo + r * (hi - lo), fd = f(d);
    }
  }
  const double t = 0.5 * (lo + hi);
  return f(t) < f0 ? t : 0.0;
}

struct CoordinateDescentResult {
  std::vector<PoseSE3> poses;
  double objective = 0.0;
  int sweeps = 0;
};

inline CoordinateDescentResult CoordinateDescent(const PoseGraph& g,
                                                 double smoothing_eps,
                                                 int max_sweeps = 20000,
                                                 double tol = 1e-15) {
  const L1Options l1 = L1Options::Smoothed(smoothing_eps);
  const size_t n = g.priors.size();
  auto poses_at = [&](const Eigen::VectorXd& x) {
    std::vector<PoseSE3> p(n);
    for (size_t i = 0; i < n; ++i) p[i] = Retract(g.priors[i], x.segment<6>(6 * i));
    return p;
  };
  auto f = [&](const Eigen::VectorXd& x) { return PgoObjective(g, poses_at(x), l1); };
  auto search = [&](Eigen::VectorXd* x, const Eigen::VectorXd& dir, double scale) {
    const double s = GoldenSection([&](double a) { return f(*x + a * dir); }, scale);
    *x += s * dir;
  };

  const size_t dims = 6 * n;
  std::vector<Eigen::VectorXd> dirs, axes;
  for (size_t k = 0; k < dims; ++k) axes.push_back(Eigen::VectorXd::Unit(dims, k));
  dirs = axes;
  bool fresh = true;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(dims);
  double fx = f(x);
  int sweeps = 0;
  while (sweeps < max_sweeps) {
    const Eigen::VectorXd start = x;
    const double before = fx;
    size_t best = 0;
    double best_gain = -1.0;
    for (size_t k = 0; k < dims; ++k) {
      search(&x, dirs[k], 1e-2);
      const double now = f(x);
      if (fx - now > best_gain) best = k, best_gain = fx - now;
      fx = now;
    }
    const Eigen::VectorXd step = x - start;
    if (step.norm() > 0.0) {
      dirs[best] = step.normalized();
      search(&x, dirs[best], 1e-2);
      fx = f(x);
    }
    ++sweeps;
    if (before - fx > tol * std::max(1.0, std::abs(before))) {
      fresh = false;
    } else if (fresh) {
      break;
    } else {
      // A degenerate direction set can stall early; retry from the axes.
      dirs = axes;
      fresh = true;
    }
  }
  return {poses_at(x), fx, sweeps};
}

}  // namespace seqpose::oracle

#endif  // SEQPOSE_TESTS_ORACLES_H_
