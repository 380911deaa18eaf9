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

#include "seqpose/attention/feature_tensor.h"

#include <algorithm>
#include <cmath>

#include "seqpose/common/error.h"

namespace seqpose {

std::string TensorShape::ToString() const {
  return std::to_string(h) + "x" + std::to_string(w) + "x" + std::to_string(c);
}

FeatureTensor::FeatureTensor(TensorShape shape)
    : FeatureTensor(shape, std::vector<double>(
                               shape.h > 0 && shape.w > 0 && shape.c > 0
                                   ? shape.size()
                                   : 0)) {}

FeatureTensor::FeatureTensor(TensorShape shape, std::vector<double> data)
    : shape_(shape), data_(std::move(data)) {
  if (shape.h <= 0 || shape.w <= 0 || shape.c <= 0) {
    throw Error(ErrorCode::kDimMismatch,
                "tensor dims must be positive, got " + shape.ToString());
  }
  if (data_.size() != shape.size()) {
    throw Error(ErrorCode::kDimMismatch,
                "tensor " + shape.ToString() + " needs " +
                    std::to_string(shape.size()) + " values, got " +
                    std::to_string(data_.size()));
  }
}

bool FeatureTensor::AllFinite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return std::isfinite(v); });
}

void CheckSameShape(const FeatureTensor& a, const FeatureTensor& b,
                    const char* what) {
  if (a.shape() != b.shape()) {
    throw Error(ErrorCode::kDimMismatch, std::string(what) + ": " +
                                             a.shape().ToString() + " vs " +
                                             b.shape().ToString());
  }
}

}  // namespace seqpose
