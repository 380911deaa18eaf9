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

#ifndef SEQPOSE_IO_TRAJECTORY_IO_H_
#define SEQPOSE_IO_TRAJECTORY_IO_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "seqpose/pose/pose.h"

namespace seqpose {

// Text trajectory: one pose per line,
//   frame_id tx ty tz qw qx qy qz
// whitespace separated, '#' starts a comment. Values are printed with 17
// significant digits so a write/read cycle is bit-exact.
struct Trajectory {
  std::vector<int64_t> frame_ids;
  std::vector<PoseSE3> poses;

  // Frame ids 0, 1, ..., n - 1.
  static Trajectory Sequential(const std::vector<PoseSE3>& poses);
  size_t size() const { return poses.size(); }
};

void WriteTrajectory(std::ostream& out, const Trajectory& trajectory);
// Throws Error(kFormat) on malformed lines.
Trajectory ReadTrajectory(std::istream& in);

// Throw Error(kIo) when the file cannot be opened.
void WriteTrajectoryFile(const std::string& path, const Trajectory& trajectory);
Trajectory ReadTrajectoryFile(const std::string& path);

}  // namespace seqpose

#endif  // SEQPOSE_IO_TRAJECTORY_IO_H_
