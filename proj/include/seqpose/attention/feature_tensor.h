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

#ifndef SEQPOSE_ATTENTION_FEATURE_TENSOR_H_
#define SEQPOSE_ATTENTION_FEATURE_TENSOR_H_

#include <span>
#include <string>
#include <vector>

namespace seqpose {

struct TensorShape {
  int h = 0;
  int w = 0;
  int c = 0;

  bool operator==(const TensorShape&) const = default;
  size_t size() const { return static_cast<size_t>(h) * w * c; }
  std::string ToString() const;
};

// H x W x C real tensor stored row-major: h outer, then w, then c.
class FeatureTensor {
 public:
  FeatureTensor() = default;
  // Zero-filled. Throws Error(kDimMismatch) if any dimension is not positive.
  explicit FeatureTensor(TensorShape shape);
  FeatureTensor(TensorShape shape, std::vector<double> data);

  const TensorShape& shape() const { return shape_; }
  int h() const { return shape_.h; }
  int w() const { return shape_.w; }
  int c() const { return shape_.c; }

  double& at(int y, int x, int ch) { return data_[Index(y, x, ch)]; }
  double at(int y, int x, int ch) const { return data_[Index(y, x, ch)]; }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }

  bool AllFinite() const;
  bool operator==(const FeatureTensor&) const = default;

 private:
  size_t Index(int y, int x, int ch) const {
    return (static_cast<size_t>(y) * shape_.w + x) * shape_.c + ch;
  }

  TensorShape shape_;
  std::vector<double> data_;
};

// Throws Error(kDimMismatch) naming `what` when shapes differ.
void CheckSameShape(const FeatureTensor& a, const FeatureTensor& b,
                    const char* what);

}  // namespace seqpose

#endif  // SEQPOSE_ATTENTION_FEATURE_TENSOR_H_
