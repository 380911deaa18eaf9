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


#include "seqpose/gradcheck/gradcheck.h"

#include "gtest/gtest.h"
#include "seqpose/common/error.h"

namespace seqpose::gradcheck {
namespace {

TEST(RelativeErrorTest, UnitFloorAndScale) {
  EXPECT_EQ(RelativeError(1e-8, 0.0), 1e-8);
  EXPECT_EQ(RelativeError(100.0, 101.0), 1.0 / 101.0);
  EXPECT_EQ(RelativeError(-3.0, -3.0), 0.0);
}

TEST(CentralDifferencesTest, ExactOnQuadratics) {
  const Eigen::VectorXd g = CentralDifferences(3, 1e-3, [](int k, double d) {
    const double x[3] = {1.0 + (k == 0) * d, -2.0 + (k == 1) * d, 0.5 + (k == 2) * d};
    return x[0] * x[0] + 3 * x[1] * x[1] - x[2];
  });
  EXPECT_NEAR(g[0], 2.0, 1e-9);
  EXPECT_NEAR(g[1], -12.0, 1e-9);
  EXPECT_NEAR(g[2], -1.0, 1e-9);
}

TEST(GradcheckTest, AllSuitesPass) {
  const Options options;
  for (const std::string& name : SuiteNames()) {
    const SuiteResult r = RunSuite(name, options);
    EXPECT_TRUE(r.passed) << name << " " << r.max_rel_error;
    EXPECT_EQ(r.name, name);
    EXPECT_LT(r.max_rel_error, 1e-6);
  }
  EXPECT_EQ(RunSuite("distance", options).points, 100);
  EXPECT_EQ(RunSuite("losses", options).points, 50);
  EXPECT_EQ(RunSuite("pgo", options).points, 50);
}

TEST(GradcheckTest, InjectedSignBugIsCaught) {
  Options options;
  options.inject_sign_bug = true;
  for (const std::string& name : SuiteNames()) {
    const SuiteResult r = RunSuite(name, options);
    EXPECT_FALSE(r.passed) << name;
    EXPECT_GT(r.max_rel_error, 1e-3) << name;
  }
}

TEST(GradcheckTest, OtherSeedsPass) {
  Options options;
  options.distance_points = options.loss_points = options.pgo_points = 10;
  for (uint64_t seed : {1ull, 2ull, 777ull}) {
    options.seed = seed;
    for (const std::string& name : SuiteNames()) {
      EXPECT_TRUE(RunSuite(name, options).passed) << name << " seed " << seed;
    }
  }
}

TEST(GradcheckTest, UnknownSuite) {
  try {
    RunSuite("jacobian", Options{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(MinResidualTest, SmallestComponent) {
  PoseSE3 a, b;
  a.t = Eigen::Vector3d(1, 2, 3);
  b.t = Eigen::Vector3d(1.5, 2, 4);
  EXPECT_EQ(MinResidual(a, b), 0.0);
  b.t = Eigen::Vector3d(1.5, 2.25, 4);
  a.q = QuatExp(LogRotation{Eigen::Vector3d(0.1, 0.2, 0.3)});
  EXPECT_NEAR(MinResidual(a, b), 0.1, 1e-15);
}

}  // namespace
}  // namespace seqpose::gradcheck
