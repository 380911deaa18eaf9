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

#include "seqpose/io/trajectory_io.h"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "seqpose/common/error.h"

namespace seqpose {
namespace {

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

template <typename T>
bool ParseToken(const std::string& token, T* value) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, *value);
  return ec == std::errc() && ptr == end;
}

}  // namespace

Trajectory Trajectory::Sequential(const std::vector<PoseSE3>& poses) {
  Trajectory trajectory;
  trajectory.poses = poses;
  for (size_t i = 0; i < poses.size(); ++i) {
    trajectory.frame_ids.push_back(static_cast<int64_t>(i));
  }
  return trajectory;
}

void WriteTrajectory(std::ostream& out, const Trajectory& trajectory) {
  if (trajectory.frame_ids.size() != trajectory.poses.size()) {
    throw Error(ErrorCode::kLengthMismatch, "frame id / pose count differ");
  }
  out << "# frame_id tx ty tz qw qx qy qz\n";
  for (size_t i = 0; i < trajectory.poses.size(); ++i) {
    const PoseSE3& p = trajectory.poses[i];
    out << trajectory.frame_ids[i];
    for (double v : {p.t.x(), p.t.y(), p.t.z(), p.q.w(), p.q.x(), p.q.y(),
                     p.q.z()}) {
      out << ' ' << FormatDouble(v);
    }
    out << '\n';
  }
}

Trajectory ReadTrajectory(std::istream& in) {
  Trajectory trajectory;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string token; fields >> token;) tokens.push_back(token);
    if (tokens.empty()) continue;

    const std::string where = "line " + std::to_string(line_number);
    if (tokens.size() != 8) {
      throw Error(ErrorCode::kFormat, where + ": expected 8 fields, got " +
                                          std::to_string(tokens.size()));
    }
    int64_t id = 0;
    std::array<double, 7> v{};
    bool ok = ParseToken(tokens[0], &id);
    for (int k = 0; k < 7 && ok; ++k) ok = ParseToken(tokens[k + 1], &v[k]);
    if (!ok) throw Error(ErrorCode::kFormat, where + ": unparsable number");

    PoseSE3 pose;
    pose.t = Eigen::Vector3d(v[0], v[1], v[2]);
    try {
      pose.q = UnitQuaternion::FromRaw(v[3], v[4], v[5], v[6]);
    } catch (const Error&) {
      throw Error(ErrorCode::kFormat, where + ": zero quaternion");
    }
    trajectory.frame_ids.push_back(id);
    trajectory.poses.push_back(pose);
  }
  return trajectory;
}

void WriteTrajectoryFile(const std::string& path, const Trajectory& trajectory) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  WriteTrajectory(out, trajectory);
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

Trajectory ReadTrajectoryFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  return ReadTrajectory(in);
}

}  // namespace seqpose
