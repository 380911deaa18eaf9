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

#include "seqpose/attention/attention.h"

#include <cmath>

#include "seqpose/common/error.h"

namespace seqpose {
namespace {

Eigen::VectorXd Normalize(const Eigen::VectorXd& scores,
                          AttentionNormalization norm) {
  if (norm == AttentionNormalization::kRawCosine) return scores;
  const Eigen::VectorXd e = (scores.array() - scores.maxCoeff()).exp().matrix();
  return e / e.sum();
}

}  // namespace

double CosineSimilarity(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimMismatch, "cosine of unequal lengths");
  }
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (size_t k = 0; k < a.size(); ++k) {
    dot += a[k] * b[k];
    na += a[k] * a[k];
    nb += b[k] * b[k];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

Eigen::VectorXd SpatialAttention(const FeatureTensor& x, const FeatureTensor& h,
                                 AttentionNormalization norm) {
  CheckSameShape(x, h, "spatial attention");
  const int c = x.c();
  const size_t pixels = static_cast<size_t>(x.h()) * x.w();
  Eigen::VectorXd scores(c);
  std::vector<double> xa(pixels);
  std::vector<double> ha(pixels);
  for (int j = 0; j < c; ++j) {
    for (size_t p = 0; p < pixels; ++p) {
      xa[p] = x.data()[p * c + j];
      ha[p] = h.data()[p * c + j];
    }
    scores[j] = CosineSimilarity(xa, ha);
  }
  return Normalize(scores, norm);
}

Eigen::VectorXd TemporalAttention(const FeatureTensor& x,
                                  const std::vector<FeatureTensor>& hs,
                                  AttentionNormalization norm) {
  if (hs.empty()) {
    throw Error(ErrorCode::kEmptySequence, "temporal attention needs N >= 1");
  }
  Eigen::VectorXd scores(hs.size());
  for (size_t i = 0; i < hs.size(); ++i) {
    CheckSameShape(x, hs[i], "temporal attention");
    scores[static_cast<Eigen::Index>(i)] = CosineSimilarity(x.data(), hs[i].data());
  }
  return Normalize(scores, norm);
}

AttentionReport ContentAugment(const FeatureTensor& x,
                               const std::vector<FeatureTensor>& hs,
                               AttentionNormalization norm) {
  AttentionReport report;
  report.temporal_weights = TemporalAttention(x, hs, norm);
  const int c = x.c();
  report.spatial_weights.resize(static_cast<Eigen::Index>(hs.size()), c);
  report.augmented = FeatureTensor(x.shape());

  auto out = report.augmented.data();
  const size_t pixels = static_cast<size_t>(x.h()) * x.w();
  for (size_t i = 0; i < hs.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    report.spatial_weights.row(row) = SpatialAttention(x, hs[i], norm).transpose();
    const auto h = hs[i].data();
    const double a_t = report.temporal_weights[row];
    for (size_t p = 0; p < pixels; ++p) {
      for (int j = 0; j < c; ++j) {
        out[p * c + j] += a_t * report.spatial_weights(row, j) * h[p * c + j];
      }
    }
  }
  return report;
}

FeatureTensor FusePair(const FeatureTensor& x_prev, const FeatureTensor& x_curr,
                       const Eigen::MatrixXd& proj) {
  CheckSameShape(x_prev, x_curr, "fuse pair");
  const int c = x_prev.c();
  if (proj.rows() != c || proj.cols() != 2 * c) {
    throw Error(ErrorCode::kDimMismatch,
                "projection must be " + std::to_string(c) + "x" +
                    std::to_string(2 * c));
  }
  FeatureTensor out(x_prev.shape());
  const size_t pixels = static_cast<size_t>(x_prev.h()) * x_prev.w();
  Eigen::VectorXd stacked(2 * c);
  for (size_t p = 0; p < pixels; ++p) {
    for (int j = 0; j < c; ++j) {
      stacked[j] = x_prev.data()[p * c + j];
      stacked[c + j] = x_curr.data()[p * c + j];
    }
    const Eigen::VectorXd fused = proj * stacked;
    for (int j = 0; j < c; ++j) out.data()[p * c + j] = fused[j];
  }
  return out;
}

}  // namespace seqpose
