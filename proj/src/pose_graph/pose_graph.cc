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

#include "seqpose/pose_graph/pose_graph.h"

#include <cmath>
#include <deque>
#include <filesystem>
#include <fstream>
#include <limits>

#include "seqpose/common/error.h"
#include "seqpose/io/trajectory_io.h"

namespace seqpose {
namespace {

constexpr double kArmijo = 1e-4;
// Decreases smaller than this (relative to |f|) are treated as rounding noise.
constexpr double kNoiseFloor = 1e-14;
constexpr int kMaxBacktracks = 60;

Eigen::VectorXd Flatten(const std::vector<Vector6d>& blocks) {
  Eigen::VectorXd v(6 * static_cast<Eigen::Index>(blocks.size()));
  for (size_t i = 0; i < blocks.size(); ++i) {
    v.segment<6>(6 * static_cast<Eigen::Index>(i)) = blocks[i];
  }
  return v;
}

std::vector<PoseSE3> RetractAll(const std::vector<PoseSE3>& poses,
                                const Eigen::VectorXd& delta) {
  std::vector<PoseSE3> out(poses.size());
  for (size_t i = 0; i < poses.size(); ++i) {
    out[i] = Retract(poses[i], delta.segment<6>(6 * static_cast<Eigen::Index>(i)));
  }
  return out;
}

struct CurvaturePair {
  Eigen::VectorXd s;
  Eigen::VectorXd y;
  double rho;
};

// Two-loop recursion: approximate inverse Hessian applied to -grad.
Eigen::VectorXd QuasiNewtonDirection(const std::deque<CurvaturePair>& pairs,
                                     const Eigen::VectorXd& grad) {
  Eigen::VectorXd q = -grad;
  std::vector<double> a(pairs.size());
  for (size_t k = pairs.size(); k-- > 0;) {
    a[k] = pairs[k].rho * pairs[k].s.dot(q);
    q -= a[k] * pairs[k].y;
  }
  if (!pairs.empty()) {
    const auto& last = pairs.back();
    q *= last.s.dot(last.y) / last.y.squaredNorm();
  }
  for (size_t k = 0; k < pairs.size(); ++k) {
    const double b = pairs[k].rho * pairs[k].y.dot(q);
    q += (a[k] - b) * pairs[k].s;
  }
  return q;
}

}  // namespace

void PoseGraph::Validate() const {
  if (priors.size() < 2) {
    throw Error(ErrorCode::kLengthMismatch, "pose graph needs N >= 2 nodes");
  }
  if (edges.size() + 1 != priors.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(priors.size()) + " nodes need " +
                    std::to_string(priors.size() - 1) + " edges, got " +
                    std::to_string(edges.size()));
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must be positive");
  }
}

void SolverConfig::Validate() const {
  if (max_iters <= 0 || !(step_init > 0.0) || !(grad_tol > 0.0) ||
      !(smoothing_eps > 0.0) || memory < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "solver fields must be positive");
  }
  if (!(line_search_shrink > 0.0 && line_search_shrink < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "line_search_shrink must lie in (0, 1)");
  }
}

const char* StopReasonName(StopReason reason) {
  switch (reason) {
    case StopReason::kGradientTolerance:
      return "gradient_tolerance";
    case StopReason::kLineSearchExhausted:
      return "line_search_exhausted";
    case StopReason::kMaxIterations:
      return "max_iterations";
  }
  return "unknown";
}

double PgoObjective(const PoseGraph& g, const std::vector<PoseSE3>& candidate,
                    const L1Options& l1) {
  g.Validate();
  if (candidate.size() != g.priors.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "candidate has " + std::to_string(candidate.size()) +
                    " poses, graph has " + std::to_string(g.priors.size()));
  }
  double prior_sum = 0.0;
  for (size_t i = 0; i < candidate.size(); ++i) {
    prior_sum += PoseDistance(g.priors[i], candidate[i], g.weights, l1);
  }
  double edge_sum = 0.0;
  for (size_t k = 0; k < g.edges.size(); ++k) {
    edge_sum += PoseDistance(candidate[k + 1],
                             Compose(g.edges[k], candidate[k]), g.weights, l1);
  }
  return prior_sum + g.alpha * edge_sum;
}

std::vector<Vector6d> PgoObjectiveGrad(const PoseGraph& g,
                                       const std::vector<PoseSE3>& candidate,
                                       const L1Options& l1) {
  g.Validate();
  if (candidate.size() != g.priors.size()) {
    throw Error(ErrorCode::kLengthMismatch, "candidate length differs from graph");
  }
  std::vector<Vector6d> grad(candidate.size(), Vector6d::Zero());
  for (size_t i = 0; i < candidate.size(); ++i) {
    const auto eval =
        jacobians::EvaluateDistance(g.priors[i], candidate[i], g.weights, l1);
    grad[i] += jacobians::ToLocal(candidate[i], eval.p);
  }
  for (size_t k = 0; k < g.edges.size(); ++k) {
    const PoseSE3 predicted = Compose(g.edges[k], candidate[k]);
    const auto eval = jacobians::EvaluateDistance(candidate[k + 1], predicted,
                                                  g.weights, l1);
    jacobians::AmbientGradient scaled_hat{g.alpha * eval.p_hat.t,
                                          g.alpha * eval.p_hat.q};
    jacobians::AmbientGradient scaled{g.alpha * eval.p.t, g.alpha * eval.p.q};
    grad[k + 1] += jacobians::ToLocal(candidate[k + 1], scaled_hat);
    jacobians::ComposePullback(g.edges[k], candidate[k], scaled, nullptr,
                               &grad[k]);
  }
  return grad;
}

PgoResult PgoOptimize(const PoseGraph& g, const SolverConfig& cfg) {
  g.Validate();
  cfg.Validate();
  const L1Options l1 = cfg.l1();

  PgoResult result;
  result.refined = g.priors;
  SolveReport& report = result.report;

  double f = PgoObjective(g, result.refined, l1);
  Eigen::VectorXd grad = Flatten(PgoObjectiveGrad(g, result.refined, l1));
  report.objective_initial = f;
  report.objective_history.push_back(f);

  std::deque<CurvaturePair> pairs;
  report.stop_reason = StopReason::kMaxIterations;
  while (true) {
    if (grad.norm() <= cfg.grad_tol) {
      report.stop_reason = StopReason::kGradientTolerance;
      break;
    }
    if (report.iterations >= cfg.max_iters) break;

    Eigen::VectorXd direction = QuasiNewtonDirection(pairs, grad);
    double slope = grad.dot(direction);
    double step = pairs.empty() ? cfg.step_init : 1.0;
    if (!(slope < 0.0)) {
      pairs.clear();
      direction = -grad;
      slope = -grad.squaredNorm();
      step = cfg.step_init;
    }

    bool accepted = false;
    std::vector<PoseSE3> trial;
    double f_trial = 0.0;
    for (int k = 0; k < kMaxBacktracks; ++k, step *= cfg.line_search_shrink) {
      trial = RetractAll(result.refined, step * direction);
      f_trial = PgoObjective(g, trial, l1);
      const double noise = kNoiseFloor * std::max(1.0, std::abs(f));
      if (f_trial <= f + kArmijo * step * slope && f - f_trial > noise) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      if (!pairs.empty()) {
        // Stale curvature can point uphill in effect; retry from steepest
        // descent before giving up.
        pairs.clear();
        continue;
      }
      report.stop_reason = StopReason::kLineSearchExhausted;
      break;
    }

    const Eigen::VectorXd grad_trial = Flatten(PgoObjectiveGrad(g, trial, l1));
    CurvaturePair pair{step * direction, grad_trial - grad, 0.0};
    const double sy = pair.s.dot(pair.y);
    if (sy > 1e-12 * pair.s.norm() * pair.y.norm()) {
      pair.rho = 1.0 / sy;
      pairs.push_back(std::move(pair));
      if (static_cast<int>(pairs.size()) > cfg.memory) pairs.pop_front();
    }

    result.refined = std::move(trial);
    f = f_trial;
    grad = grad_trial;
    ++report.iterations;
    report.objective_history.push_back(f);
  }

  report.objective_final = f;
  report.grad_norm_final = grad.norm();
  report.converged = report.stop_reason != StopReason::kMaxIterations;
  return result;
}

std::vector<PoseSE3> ChainEdges(const PoseSE3& start,
                                const std::vector<PoseSE3>& edges) {
  std::vector<PoseSE3> poses{start};
  poses.reserve(edges.size() + 1);
  for (const PoseSE3& e : edges) poses.push_back(Compose(e, poses.back()));
  return poses;
}

void ApplyGraphConfig(const KeyValueFile& cfg, PoseGraph* graph,
                      SolverConfig* solver) {
  if (graph != nullptr) {
    if (auto v = cfg.GetDouble("alpha")) graph->alpha = *v;
    if (auto v = cfg.GetDouble("beta")) graph->weights.beta = *v;
    if (auto v = cfg.GetDouble("gamma")) graph->weights.gamma = *v;
  }
  if (solver != nullptr) {
    if (auto v = cfg.GetInt("max_iters")) solver->max_iters = static_cast<int>(*v);
    if (auto v = cfg.GetDouble("step_init")) solver->step_init = *v;
    if (auto v = cfg.GetDouble("grad_tol")) solver->grad_tol = *v;
    if (auto v = cfg.GetDouble("smoothing_eps")) solver->smoothing_eps = *v;
    if (auto v = cfg.GetDouble("line_search_shrink")) {
      solver->line_search_shrink = *v;
    }
    if (auto v = cfg.GetInt("memory")) solver->memory = static_cast<int>(*v);
  }
}

GraphDirectory ReadGraphDirectory(const std::string& dir) {
  const std::filesystem::path root(dir);
  GraphDirectory out;
  out.graph.priors = ReadTrajectoryFile((root / "priors.txt").string()).poses;
  out.graph.edges = ReadTrajectoryFile((root / "edges.txt").string()).poses;
  const auto cfg_path = root / "graph.cfg";
  if (std::filesystem::exists(cfg_path)) {
    ApplyGraphConfig(KeyValueFile::Load(cfg_path.string()), &out.graph,
                     &out.solver);
  }
  out.graph.Validate();
  out.solver.Validate();
  return out;
}

void WriteGraphDirectory(const std::string& dir, const PoseGraph& graph,
                         const SolverConfig& solver) {
  graph.Validate();
  std::filesystem::create_directories(dir);
  const std::filesystem::path root(dir);
  WriteTrajectoryFile((root / "priors.txt").string(),
                      Trajectory::Sequential(graph.priors));
  WriteTrajectoryFile((root / "edges.txt").string(),
                      Trajectory::Sequential(graph.edges));
  std::ofstream cfg(root / "graph.cfg");
  if (!cfg) throw Error(ErrorCode::kIo, "cannot write graph.cfg in " + dir);
  cfg.precision(17);
  cfg << "alpha=" << graph.alpha << "\n"
      << "beta=" << graph.weights.beta << "\n"
      << "gamma=" << graph.weights.gamma << "\n"
      << "max_iters=" << solver.max_iters << "\n"
      << "step_init=" << solver.step_init << "\n"
      << "grad_tol=" << solver.grad_tol << "\n"
      << "smoothing_eps=" << solver.smoothing_eps << "\n"
      << "line_search_shrink=" << solver.line_search_shrink << "\n"
      << "memory=" << solver.memory << "\n";
}

}  // namespace seqpose
