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

#ifndef SEQPOSE_METRICS_METRICS_H_
#define SEQPOSE_METRICS_METRICS_H_

#include <cstdint>
#include <ostream>
#include <vector>

#include "seqpose/pose/pose.h"

namespace seqpose {

struct ErrorSeries {
  std::vector<double> trans_errors;  // meters
  std::vector<double> rot_errors;    // degrees
  std::vector<int64_t> frame_ids;

  size_t size() const { return trans_errors.size(); }
};

// Euclidean translation error and geodesic rotation angle 2 acos |<q, q_gt>|
// in degrees. Throws kLengthMismatch unless both lists have the same
// nonzero length.
ErrorSeries FrameErrors(const std::vector<PoseSE3>& pred,
                        const std::vector<PoseSE3>& gt);

enum class SummaryMode { kMedian, kMean };

struct ErrorSummary {
  double trans = 0.0;
  double rot = 0.0;
};

// Median is the lower of the two central order statistics for even counts.
// Throws kEmptySeries.
ErrorSummary Summarize(const ErrorSeries& e, SummaryMode mode);
double Median(std::vector<double> values);
double Mean(const std::vector<double>& values);

enum class ErrorComponent { kTranslation, kRotation };

struct CdfCurve {
  std::vector<double> thresholds;
  std::vector<double> fractions;
};

// Empirical CDF at n_points thresholds spaced linearly over [0, max error].
// Throws kEmptySeries, or kInvalidArgument when n_points < 2.
CdfCurve Cdf(const ErrorSeries& e, ErrorComponent component, int n_points);
// Fraction of `values` <= threshold.
double CdfAt(const std::vector<double>& values, double threshold);

// "threshold,fraction" rows under a header line.
void WriteCdfCsv(std::ostream& out, const CdfCurve& curve);

}  // namespace seqpose

#endif  // SEQPOSE_METRICS_METRICS_H_
