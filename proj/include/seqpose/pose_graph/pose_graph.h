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

#ifndef SEQPOSE_POSE_GRAPH_POSE_GRAPH_H_
#define SEQPOSE_POSE_GRAPH_POSE_GRAPH_H_

#include <string>
#include <vector>

#include "seqpose/io/key_value.h"
#include "seqpose/pose/distance.h"
#include "seqpose/pose/pose.h"

namespace seqpose {

// Chain graph over one window: node i carries a predicted global pose, edge k
// the fixed relative pose from node k to node k + 1.
struct PoseGraph {
  std::vector<PoseSE3> priors;
  std::vector<PoseSE3> edges;
  double alpha = 1.0;
  LossWeights weights;

  // Throws kLengthMismatch (N < 2 or edge count != N - 1) or
  // kInvalidArgument (alpha <= 0).
  void Validate() const;
  int num_nodes() const { return static_cast<int>(priors.size()); }
};

struct SolverConfig {
  int max_iters = 500;
  double step_init = 1e-2;
  double grad_tol = 1e-8;
  double smoothing_eps = 1e-6;
  double line_search_shrink = 0.5;
  // Curvature pairs kept by the quasi-Newton direction; 0 gives plain
  // steepest descent.
  int memory = 10;

  void Validate() const;
  L1Options l1() const { return L1Options::Smoothed(smoothing_eps); }
};

enum class StopReason {
  kGradientTolerance,
  // No step along the search direction decreases the objective by more than
  // rounding noise.
  kLineSearchExhausted,
  kMaxIterations,
};

const char* StopReasonName(StopReason reason);

struct SolveReport {
  int iterations = 0;
  double objective_initial = 0.0;
  double objective_final = 0.0;
  double grad_norm_final = 0.0;
  bool converged = false;
  StopReason stop_reason = StopReason::kMaxIterations;
  // Objective after every accepted iteration, starting with the initial value.
  std::vector<double> objective_history;
};

// sum_i D(P_i, P'_i) + alpha * sum_k D(P'_{k+1}, E_k * P'_k).
double PgoObjective(const PoseGraph& g, const std::vector<PoseSE3>& candidate,
                    const L1Options& l1 = {});

// Gradient in local coordinates of every candidate node, [dt; dw] with the
// rotation perturbed as q * exp(dw).
std::vector<Vector6d> PgoObjectiveGrad(
    const PoseGraph& g, const std::vector<PoseSE3>& candidate,
    const L1Options& l1 = L1Options::Smoothed());

struct PgoResult {
  std::vector<PoseSE3> refined;
  SolveReport report;
};

// Minimizes the smoothed objective starting from the priors. Limited-memory
// quasi-Newton directions with Armijo backtracking; every accepted step
// strictly lowers the objective.
PgoResult PgoOptimize(const PoseGraph& g, const SolverConfig& cfg = {});

// Dead reckoning: pose[0] = start, pose[k + 1] = edges[k] * pose[k].
std::vector<PoseSE3> ChainEdges(const PoseSE3& start,
                                const std::vector<PoseSE3>& edges);

// Graph directory: priors.txt, edges.txt and an optional graph.cfg holding
// alpha, beta, gamma and solver fields as key=value lines.
struct GraphDirectory {
  PoseGraph graph;
  SolverConfig solver;
};

void ApplyGraphConfig(const KeyValueFile& cfg, PoseGraph* graph,
                      SolverConfig* solver);
GraphDirectory ReadGraphDirectory(const std::string& dir);
void WriteGraphDirectory(const std::string& dir, const PoseGraph& graph,
                         const SolverConfig& solver);

}  // namespace seqpose

#endif  // SEQPOSE_POSE_GRAPH_POSE_GRAPH_H_
