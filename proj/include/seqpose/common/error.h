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

#ifndef SEQPOSE_COMMON_ERROR_H_
#define SEQPOSE_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace seqpose {

enum class ErrorCode {
  kZeroQuaternion,
  kLengthMismatch,
  kDimMismatch,
  kEmptySequence,
  kEmptySeries,
  kInvalidArgument,
  kIo,
  kFormat,
};

const char* ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// command-line front end can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroQuaternion:
      return "ZeroQuaternion";
    case ErrorCode::kLengthMismatch:
      return "LengthMismatch";
    case ErrorCode::kDimMismatch:
      return "DimMismatch";
    case ErrorCode::kEmptySequence:
      return "EmptySequence";
    case ErrorCode::kEmptySeries:
      return "EmptySeries";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kIo:
      return "IoError";
    case ErrorCode::kFormat:
      return "FormatError";
  }
  return "Unknown";
}

}  // namespace seqpose

#endif  // SEQPOSE_COMMON_ERROR_H_
