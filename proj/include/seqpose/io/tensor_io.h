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

#ifndef SEQPOSE_IO_TENSOR_IO_H_
#define SEQPOSE_IO_TENSOR_IO_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "seqpose/attention/feature_tensor.h"

namespace seqpose {

// SEQT binary layout (all integers and floats little-endian):
//   "SEQT"            4 bytes magic
//   version   u16     = 1
//   h, w, c, n u32    shared shape and tensor count
//   n*h*w*c   f64     tensors back to back, each row-major (h, w, c)
inline constexpr char kSeqtMagic[4] = {'S', 'E', 'Q', 'T'};
inline constexpr uint16_t kSeqtVersion = 1;
inline constexpr size_t kSeqtHeaderBytes = 4 + 2 + 4 * 4;

// All tensors must share one shape; an empty list is rejected.
void WriteSeqt(std::ostream& out, const std::vector<FeatureTensor>& tensors);
// Throws Error(kFormat) on bad magic, unsupported version or truncation.
std::vector<FeatureTensor> ReadSeqt(std::istream& in);

void WriteSeqtFile(const std::string& path,
                   const std::vector<FeatureTensor>& tensors);
std::vector<FeatureTensor> ReadSeqtFile(const std::string& path);

}  // namespace seqpose

#endif  // SEQPOSE_IO_TENSOR_IO_H_
