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

#include "seqpose/metrics/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "seqpose/common/error.h"

namespace seqpose {

ErrorSeries FrameErrors(const std::vector<PoseSE3>& pred,
                        const std::vector<PoseSE3>& gt) {
  if (pred.empty() || pred.size() != gt.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "prediction has " + std::to_string(pred.size()) +
                    " poses, ground truth " + std::to_string(gt.size()));
  }
  ErrorSeries e;
  for (size_t i = 0; i < pred.size(); ++i) {
    e.trans_errors.push_back((pred[i].t - gt[i].t).norm());
    e.rot_errors.push_back(RotationAngle(pred[i].q, gt[i].q) * 180.0 /
                           std::numbers::pi);
    e.frame_ids.push_back(static_cast<int64_t>(i));
  }
  return e;
}

double Median(std::vector<double> values) {
  if (values.empty()) throw Error(ErrorCode::kEmptySeries, "median of nothing");
  const size_t mid = (values.size() - 1) / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  return values[mid];
}

double Mean(const std::vector<double>& values) {
  if (values.empty()) throw Error(ErrorCode::kEmptySeries, "mean of nothing");
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

ErrorSummary Summarize(const ErrorSeries& e, SummaryMode mode) {
  if (e.size() == 0) throw Error(ErrorCode::kEmptySeries, "empty error series");
  if (mode == SummaryMode::kMedian) {
    return {Median(e.trans_errors), Median(e.rot_errors)};
  }
  return {Mean(e.trans_errors), Mean(e.rot_errors)};
}

double CdfAt(const std::vector<double>& values, double threshold) {
  const auto count = std::count_if(values.begin(), values.end(),
                                   [&](double v) { return v <= threshold; });
  return static_cast<double>(count) / static_cast<double>(values.size());
}

CdfCurve Cdf(const ErrorSeries& e, ErrorComponent component, int n_points) {
  if (e.size() == 0) throw Error(ErrorCode::kEmptySeries, "empty error series");
  if (n_points < 2) {
    throw Error(ErrorCode::kInvalidArgument, "CDF needs at least 2 points");
  }
  const auto& values = component == ErrorComponent::kTranslation
                           ? e.trans_errors
                           : e.rot_errors;
  const double max_error = *std::max_element(values.begin(), values.end());
  CdfCurve curve;
  for (int k = 0; k < n_points; ++k) {
    // The last threshold is pinned to the max so the curve ends at exactly 1.
    const double threshold =
        k + 1 == n_points ? max_error : max_error * k / (n_points - 1);
    curve.thresholds.push_back(threshold);
    curve.fractions.push_back(CdfAt(values, threshold));
  }
  return curve;
}

void WriteCdfCsv(std::ostream& out, const CdfCurve& curve) {
  out << "threshold,fraction\n";
  char buf[64];
  for (size_t k = 0; k < curve.thresholds.size(); ++k) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", curve.thresholds[k],
                  curve.fractions[k]);
    out << buf;
  }
}

}  // namespace seqpose
