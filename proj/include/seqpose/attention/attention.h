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

#ifndef SEQPOSE_ATTENTION_ATTENTION_H_
#define SEQPOSE_ATTENTION_ATTENTION_H_

#include <vector>

#include "Eigen/Core"
#include "seqpose/attention/feature_tensor.h"

namespace seqpose {

// How raw cosine scores become attention weights.
enum class AttentionNormalization {
  kSoftmax,    // weights form a distribution
  kRawCosine,  // scores used as-is
};

// Cosine similarity of two equally sized vectors; 0 if either has zero norm.
double CosineSimilarity(std::span<const double> a, std::span<const double> b);

// Per-channel cosine similarity between x and h (each channel vectorized over
// h*w), normalized across the C channels.
Eigen::VectorXd SpatialAttention(
    const FeatureTensor& x, const FeatureTensor& h,
    AttentionNormalization norm = AttentionNormalization::kSoftmax);

// Cosine similarity between the fully vectorized x and each hidden state,
// normalized across the N states. Throws kEmptySequence for empty `hs`.
Eigen::VectorXd TemporalAttention(
    const FeatureTensor& x, const std::vector<FeatureTensor>& hs,
    AttentionNormalization norm = AttentionNormalization::kSoftmax);

struct AttentionReport {
  Eigen::VectorXd temporal_weights;  // N
  Eigen::MatrixXd spatial_weights;   // N x C, row i belongs to hs[i]
  FeatureTensor augmented;
};

// Co-visibility augmentation of one view:
//   out[y, x, j] = sum_i temporal[i] * spatial[i, j] * hs[i][y, x, j]
// over every hidden state in the window, including later frames.
AttentionReport ContentAugment(
    const FeatureTensor& x, const std::vector<FeatureTensor>& hs,
    AttentionNormalization norm = AttentionNormalization::kSoftmax);

// Channel concatenation [x_prev, x_curr] followed by a per-pixel linear map
// back to C channels. `proj` is C x 2C.
FeatureTensor FusePair(const FeatureTensor& x_prev, const FeatureTensor& x_curr,
                       const Eigen::MatrixXd& proj);

}  // namespace seqpose

#endif  // SEQPOSE_ATTENTION_ATTENTION_H_
