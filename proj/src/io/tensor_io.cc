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

#include "seqpose/io/tensor_io.h"

#include <bit>
#include <cstring>
#include <fstream>

#include "seqpose/common/error.h"

namespace seqpose {
namespace {

template <typename T>
void PutLittleEndian(std::ostream& out, T value) {
  using U = std::conditional_t<sizeof(T) == 8, uint64_t,
                               std::conditional_t<sizeof(T) == 4, uint32_t,
                                                  uint16_t>>;
  const U bits = std::bit_cast<U>(value);
  char bytes[sizeof(U)];
  for (size_t i = 0; i < sizeof(U); ++i) {
    bytes[i] = static_cast<char>((bits >> (8 * i)) & 0xFF);
  }
  out.write(bytes, sizeof(U));
}

template <typename T>
T GetLittleEndian(std::istream& in) {
  using U = std::conditional_t<sizeof(T) == 8, uint64_t,
                               std::conditional_t<sizeof(T) == 4, uint32_t,
                                                  uint16_t>>;
  unsigned char bytes[sizeof(U)];
  if (!in.read(reinterpret_cast<char*>(bytes), sizeof(U))) {
    throw Error(ErrorCode::kFormat, "truncated SEQT stream");
  }
  U bits = 0;
  for (size_t i = 0; i < sizeof(U); ++i) {
    bits |= static_cast<U>(static_cast<U>(bytes[i]) << (8 * i));
  }
  return std::bit_cast<T>(bits);
}

}  // namespace

void WriteSeqt(std::ostream& out, const std::vector<FeatureTensor>& tensors) {
  if (tensors.empty()) {
    throw Error(ErrorCode::kEmptySequence, "SEQT needs at least one tensor");
  }
  const TensorShape shape = tensors.front().shape();
  for (const auto& t : tensors) CheckSameShape(tensors.front(), t, "SEQT");

  out.write(kSeqtMagic, 4);
  PutLittleEndian<uint16_t>(out, kSeqtVersion);
  PutLittleEndian<uint32_t>(out, static_cast<uint32_t>(shape.h));
  PutLittleEndian<uint32_t>(out, static_cast<uint32_t>(shape.w));
  PutLittleEndian<uint32_t>(out, static_cast<uint32_t>(shape.c));
  PutLittleEndian<uint32_t>(out, static_cast<uint32_t>(tensors.size()));
  for (const auto& t : tensors) {
    for (double v : t.data()) PutLittleEndian<double>(out, v);
  }
}

std::vector<FeatureTensor> ReadSeqt(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kSeqtMagic, 4) != 0) {
    throw Error(ErrorCode::kFormat, "bad SEQT magic");
  }
  const auto version = GetLittleEndian<uint16_t>(in);
  if (version != kSeqtVersion) {
    throw Error(ErrorCode::kFormat,
                "unsupported SEQT version " + std::to_string(version));
  }
  TensorShape shape;
  shape.h = static_cast<int>(GetLittleEndian<uint32_t>(in));
  shape.w = static_cast<int>(GetLittleEndian<uint32_t>(in));
  shape.c = static_cast<int>(GetLittleEndian<uint32_t>(in));
  const auto n = GetLittleEndian<uint32_t>(in);
  if (shape.h <= 0 || shape.w <= 0 || shape.c <= 0 || n == 0) {
    throw Error(ErrorCode::kFormat, "SEQT header has a zero dimension");
  }

  std::vector<FeatureTensor> tensors;
  tensors.reserve(n);
  for (uint32_t k = 0; k < n; ++k) {
    std::vector<double> data(shape.size());
    for (double& v : data) v = GetLittleEndian<double>(in);
    tensors.emplace_back(shape, std::move(data));
  }
  return tensors;
}

void WriteSeqtFile(const std::string& path,
                   const std::vector<FeatureTensor>& tensors) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  WriteSeqt(out, tensors);
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

std::vector<FeatureTensor> ReadSeqtFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  return ReadSeqt(in);
}

}  // namespace seqpose
