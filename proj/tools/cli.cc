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

#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <utility>

#include "CLI11.hpp"
#include "seqpose/attention/attention.h"
#include "seqpose/attention/convlstm.h"
#include "seqpose/attention/vo_sequence.h"
#include "seqpose/common/rng.h"
#include "seqpose/gradcheck/gradcheck.h"
#include "seqpose/io/key_value.h"
#include "seqpose/io/tensor_io.h"
#include "seqpose/io/trajectory_io.h"
#include "seqpose/metrics/metrics.h"
#include "seqpose/pose_graph/pose_graph.h"
#include "seqpose/sim/simulator.h"

namespace seqpose::cli {
namespace {

namespace fs = std::filesystem;

constexpr char kSeedEnv[] = "SEQPOSE_SEED";
constexpr char kManifestName[] = "manifest.txt";

std::string Text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
std::string Text(int v) { return std::to_string(v); }
std::string Text(uint64_t v) { return std::to_string(v); }
std::string Text(bool v) { return v ? "true" : "false"; }
std::string Text(const std::string& v) { return v; }

using Entries = std::vector<std::pair<std::string, std::string>>;

// Binds kebab-case options and remembers how to print their resolved values,
// so every manifest can be fed back through --config.
class OptionSet {
 public:
  explicit OptionSet(CLI::App* app) : app_(app) {}

  template <typename T>
  CLI::Option* Add(const std::string& name, T* value, const std::string& help) {
    snapshot_.emplace_back(name, [value] { return Text(*value); });
    return app_->add_option("--" + name, *value, help)->capture_default_str();
  }

  Entries Snapshot() const {
    Entries entries;
    for (const auto& [name, text] : snapshot_) entries.emplace_back(name, text());
    return entries;
  }

 private:
  CLI::App* app_;
  std::vector<std::pair<std::string, std::function<std::string()>>> snapshot_;
};

void WriteManifest(const fs::path& dir, const std::string& command,
                   const Entries& config, const Entries& paths) {
  const fs::path path = dir / kManifestName;
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << "# seqpose run manifest; rerun with --config " << kManifestName << "\n";
  out << "command=" << command << "\n";
  out << "version=" << SEQPOSE_VERSION << "\n";
  for (const auto& [k, v] : config) out << k << "=" << v << "\n";
  for (const auto& [k, v] : paths) out << k << "=" << v << "\n";
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path.string());
}

void MakeOutputDir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw Error(ErrorCode::kIo, "cannot create output directory " + dir);
  }
}

void WriteTextFile(const fs::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  out << body;
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  SimConfig cfg;
  int feat_h = 4;
  int feat_w = 4;
  int feat_c = 8;
  std::string output;
  std::string config;
  std::unique_ptr<OptionSet> options;
};

void RegisterSimulate(CLI::App* app, SimulateArgs* a) {
  CLI::App* sub = app->add_subcommand(
      "simulate", "Generate a synthetic trajectory with noisy measurements");
  a->options = std::make_unique<OptionSet>(sub);
  OptionSet& o = *a->options;
  SimConfig& c = a->cfg;
  o.Add("frames", &c.n_frames, "Number of frames (>= 2)");
  o.Add("seed", &c.seed, "Seed; SEQPOSE_SEED is used when absent");
  o.Add("step-mean", &c.step_mean, "Mean forward step (m)");
  o.Add("step-jitter", &c.step_jitter, "Relative step jitter");
  o.Add("turn-sigma", &c.turn_sigma, "Heading noise per step (deg)");
  o.Add("global-t-sigma", &c.global_t_sigma, "Global translation noise (m)");
  o.Add("global-r-sigma", &c.global_r_sigma, "Global rotation noise (deg)");
  o.Add("outlier-rate", &c.outlier_rate, "Probability of a global outlier");
  o.Add("outlier-t", &c.outlier_t, "Outlier jump length (m)");
  o.Add("vo-t-sigma", &c.vo_t_sigma, "Relative translation noise (m)");
  o.Add("vo-r-sigma", &c.vo_r_sigma, "Relative rotation noise (deg)");
  o.Add("feat-h", &a->feat_h, "Feature height");
  o.Add("feat-w", &a->feat_w, "Feature width");
  o.Add("feat-c", &a->feat_c, "Feature channels");
  o.Add("covis-overlap", &c.covis_overlap, "Shared feature content in [0, 1]");
  sub->add_option("-o,--output", a->output, "Output directory")->required();
  sub->add_option("--config", a->config, "key=value file below the flags");
}

int ExecSimulate(SimulateArgs& a, std::ostream& out) {
  a.cfg.feat_dims = {a.feat_h, a.feat_w, a.feat_c};
  a.cfg.Validate();
  const SimOutput sim = Simulate(a.cfg);
  MakeOutputDir(a.output);
  const fs::path dir(a.output);

  WriteTrajectoryFile((dir / "gt.txt").string(), Trajectory::Sequential(sim.gt));
  WriteTrajectoryFile((dir / "global.txt").string(),
                      Trajectory::Sequential(sim.global_meas));
  // Edge k carries the frame id of its source frame k.
  WriteTrajectoryFile((dir / "vo.txt").string(),
                      Trajectory::Sequential(sim.vo_meas));
  std::string mask = "# frame_id outlier\n";
  for (size_t k = 0; k < sim.outlier_mask.size(); ++k) {
    mask += std::to_string(k) + " " + (sim.outlier_mask[k] ? "1" : "0") + "\n";
  }
  WriteTextFile(dir / "outliers.txt", mask);
  WriteSeqtFile((dir / "features.seqt").string(), sim.features);
  WriteManifest(dir, "simulate", a.options->Snapshot(),
                {{"output_dir", a.output}});
  out << "simulate: " << sim.gt.size() << " frames written to " << a.output
      << "\n";
  return kExitOk;
}

// -------------------------------------------------------------------- fuse

struct FuseArgs {
  std::string features;
  std::string output;
  uint64_t seed = 0;
  int kernel = 3;
  double head_scale = 0.1;
  std::string projection = "mean";
  std::string normalization = "softmax";
  std::string config;
  std::unique_ptr<OptionSet> options;
};

void RegisterFuse(CLI::App* app, FuseArgs* a) {
  CLI::App* sub = app->add_subcommand(
      "fuse", "Fuse frame pairs, run the ConvLSTM and augment every view");
  a->options = std::make_unique<OptionSet>(sub);
  OptionSet& o = *a->options;
  o.Add("features", &a->features, "Input SEQT feature file")->required();
  o.Add("seed", &a->seed, "Seed for cell and head weights");
  o.Add("kernel", &a->kernel, "ConvLSTM kernel side (odd)");
  o.Add("head-scale", &a->head_scale, "Range of the seeded readout weights");
  o.Add("projection", &a->projection, "Pair projection: mean or seeded")
      ->check(CLI::IsMember({"mean", "seeded"}));
  o.Add("normalization", &a->normalization, "Attention weights: softmax or raw")
      ->check(CLI::IsMember({"softmax", "raw"}));
  sub->add_option("-o,--output", a->output, "Output directory")->required();
  sub->add_option("--config", a->config, "key=value file below the flags");
}

Eigen::MatrixXd PairProjection(const FuseArgs& a, int channels) {
  Eigen::MatrixXd proj(channels, 2 * channels);
  if (a.projection == "mean") {
    proj << 0.5 * Eigen::MatrixXd::Identity(channels, channels),
        0.5 * Eigen::MatrixXd::Identity(channels, channels);
    return proj;
  }
  Rng rng = Rng::ForStream(a.seed, 13);
  const double bound = 1.0 / std::sqrt(2.0 * channels);
  for (Eigen::Index r = 0; r < proj.rows(); ++r) {
    for (Eigen::Index c = 0; c < proj.cols(); ++c) {
      proj(r, c) = rng.Uniform(-bound, bound);
    }
  }
  return proj;
}

std::string CsvRow(const std::string& lead, const Eigen::VectorXd& v) {
  std::string row = lead;
  for (Eigen::Index i = 0; i < v.size(); ++i) row += "," + Text(v[i]);
  return row + "\n";
}

int ExecFuse(FuseArgs& a, std::ostream& out) {
  const std::vector<FeatureTensor> xs = ReadSeqtFile(a.features);
  const int n = static_cast<int>(xs.size());
  const int channels = xs.front().c();
  const AttentionNormalization norm = a.normalization == "raw"
                                          ? AttentionNormalization::kRawCosine
                                          : AttentionNormalization::kSoftmax;

  // Frame 0 has no predecessor and is paired with itself.
  const Eigen::MatrixXd proj = PairProjection(a, channels);
  std::vector<FeatureTensor> fused;
  for (int k = 0; k < n; ++k) fused.push_back(FusePair(xs[k == 0 ? 0 : k - 1], xs[k], proj));

  const ConvLstmParams params = ConvLstmParams::Seeded(
      a.kernel, channels, channels, Rng::ForStream(a.seed, 11).Next());
  const LinearHead head = LinearHead::Seeded(
      channels, Rng::ForStream(a.seed, 12).Next(), a.head_scale);
  const VoSequenceResult vo = RunVoSequence(fused, params, head);

  std::vector<FeatureTensor> augmented;
  std::string temporal = "frame";
  for (int i = 0; i < n; ++i) temporal += ",h" + std::to_string(i);
  temporal += "\n";
  std::string spatial = "frame,state";
  for (int j = 0; j < channels; ++j) spatial += ",c" + std::to_string(j);
  spatial += "\n";
  for (int t = 0; t < n; ++t) {
    const AttentionReport report = ContentAugment(xs[t], vo.hidden_states, norm);
    augmented.push_back(report.augmented);
    temporal += CsvRow(std::to_string(t), report.temporal_weights);
    for (int i = 0; i < n; ++i) {
      spatial += CsvRow(std::to_string(t) + "," + std::to_string(i),
                        report.spatial_weights.row(i).transpose());
    }
  }

  MakeOutputDir(a.output);
  const fs::path dir(a.output);
  WriteSeqtFile((dir / "augmented.seqt").string(), augmented);
  WriteTextFile(dir / "attention.csv", temporal);
  WriteTextFile(dir / "spatial_attention.csv", spatial);
  WriteTrajectoryFile((dir / "vo_pred.txt").string(),
                      Trajectory::Sequential(vo.relative_poses));
  WriteManifest(dir, "fuse", a.options->Snapshot(), {{"output_dir", a.output}});
  out << "fuse: " << n << " frames of " << xs.front().shape().ToString()
      << " written to " << a.output << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- optimize

struct OptimizeArgs {
  std::string graph;
  std::string priors;
  std::string edges;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> gamma;
  std::optional<int> max_iters;
  std::optional<double> step_init;
  std::optional<double> grad_tol;
  std::optional<double> smoothing_eps;
  std::optional<double> line_search_shrink;
  std::optional<int> memory;
  std::string output;
  std::string config;
};

void RegisterOptimize(CLI::App* app, OptimizeArgs* a) {
  CLI::App* sub = app->add_subcommand(
      "optimize", "Refine global poses against relative-pose edges");
  CLI::Option* graph =
      sub->add_option("--graph", a->graph, "Graph directory (priors.txt, edges.txt, graph.cfg)");
  CLI::Option* priors = sub->add_option("--priors", a->priors, "Prior trajectory file");
  CLI::Option* edges = sub->add_option("--edges", a->edges, "Edge trajectory file");
  graph->excludes(priors)->excludes(edges);
  priors->needs(edges);
  edges->needs(priors);
  sub->add_option("--alpha", a->alpha, "Edge term weight (default 1)");
  sub->add_option("--beta", a->beta, "Translation balance scalar (default -3)");
  sub->add_option("--gamma", a->gamma, "Rotation balance scalar (default 0)");
  sub->add_option("--max-iters", a->max_iters, "Iteration cap (default 500)");
  sub->add_option("--step-init", a->step_init, "First trial step (default 1e-2)");
  sub->add_option("--grad-tol", a->grad_tol, "Gradient-norm tolerance (default 1e-8)");
  sub->add_option("--smoothing-eps", a->smoothing_eps, "L1 smoothing (default 1e-6)");
  sub->add_option("--line-search-shrink", a->line_search_shrink,
                  "Backtracking factor (default 0.5)");
  sub->add_option("--memory", a->memory, "Quasi-Newton pairs (default 10)");
  sub->add_option("-o,--output", a->output, "Output directory")->required();
  sub->add_option("--config", a->config, "key=value file below the flags");
}

template <typename T>
void Override(const std::optional<T>& value, T* target) {
  if (value) *target = *value;
}

std::string ReportText(const SolveReport& r) {
  std::string s;
  s += "iterations: " + Text(r.iterations) + "\n";
  s += "objective_initial: " + Text(r.objective_initial) + "\n";
  s += "objective_final: " + Text(r.objective_final) + "\n";
  s += "grad_norm_final: " + Text(r.grad_norm_final) + "\n";
  s += "converged: " + Text(r.converged) + "\n";
  s += std::string("stop_reason: ") + StopReasonName(r.stop_reason) + "\n";
  return s;
}

int ExecOptimize(OptimizeArgs& a, std::ostream& out) {
  if (a.graph.empty() && a.priors.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "need --graph or --priors/--edges");
  }
  PoseGraph graph;
  SolverConfig solver;
  std::vector<int64_t> frame_ids;
  if (!a.graph.empty()) {
    GraphDirectory loaded = ReadGraphDirectory(a.graph);
    graph = std::move(loaded.graph);
    solver = loaded.solver;
    frame_ids = ReadTrajectoryFile((fs::path(a.graph) / "priors.txt").string()).frame_ids;
  } else {
    const Trajectory priors = ReadTrajectoryFile(a.priors);
    graph.priors = priors.poses;
    graph.edges = ReadTrajectoryFile(a.edges).poses;
    frame_ids = priors.frame_ids;
  }
  Override(a.alpha, &graph.alpha);
  Override(a.beta, &graph.weights.beta);
  Override(a.gamma, &graph.weights.gamma);
  Override(a.max_iters, &solver.max_iters);
  Override(a.step_init, &solver.step_init);
  Override(a.grad_tol, &solver.grad_tol);
  Override(a.smoothing_eps, &solver.smoothing_eps);
  Override(a.line_search_shrink, &solver.line_search_shrink);
  Override(a.memory, &solver.memory);
  graph.Validate();
  solver.Validate();

  const PgoResult result = PgoOptimize(graph, solver);

  MakeOutputDir(a.output);
  const fs::path dir(a.output);
  WriteTrajectoryFile((dir / "refined.txt").string(),
                      Trajectory{frame_ids, result.refined});
  const std::string report = ReportText(result.report);
  WriteTextFile(dir / "report.txt", report);
  Entries inputs;
  if (!a.graph.empty()) {
    inputs.emplace_back("graph", a.graph);
  } else {
    inputs.emplace_back("priors", a.priors);
    inputs.emplace_back("edges", a.edges);
  }
  inputs.emplace_back("output_dir", a.output);
  WriteManifest(dir, "optimize",
                {{"alpha", Text(graph.alpha)},
                 {"beta", Text(graph.weights.beta)},
                 {"gamma", Text(graph.weights.gamma)},
                 {"max-iters", Text(solver.max_iters)},
                 {"step-init", Text(solver.step_init)},
                 {"grad-tol", Text(solver.grad_tol)},
                 {"smoothing-eps", Text(solver.smoothing_eps)},
                 {"line-search-shrink", Text(solver.line_search_shrink)},
                 {"memory", Text(solver.memory)}},
                inputs);
  out << report;
  return kExitOk;
}

// -------------------------------------------------------------------- eval

struct EvalArgs {
  std::string pred;
  std::string gt;
  std::string cdf;
  int cdf_points = 101;
  std::string cdf_component = "trans";
  std::string config;
};

void RegisterEval(CLI::App* app, EvalArgs* a) {
  CLI::App* sub = app->add_subcommand(
      "eval", "Median and mean errors of a trajectory against ground truth");
  sub->add_option("--pred", a->pred, "Estimated trajectory")->required();
  sub->add_option("--gt", a->gt, "Ground-truth trajectory")->required();
  sub->add_option("--cdf", a->cdf, "Write the error CDF as CSV here");
  sub->add_option("--cdf-points", a->cdf_points, "CDF thresholds")
      ->capture_default_str();
  sub->add_option("--cdf-component", a->cdf_component, "trans or rot")
      ->check(CLI::IsMember({"trans", "rot"}))
      ->capture_default_str();
  sub->add_option("--config", a->config, "key=value file below the flags");
}

int ExecEval(EvalArgs& a, std::ostream& out) {
  const Trajectory pred = ReadTrajectoryFile(a.pred);
  const Trajectory gt = ReadTrajectoryFile(a.gt);
  if (pred.frame_ids != gt.frame_ids) {
    throw Error(ErrorCode::kLengthMismatch,
                "frame ids of " + a.pred + " and " + a.gt + " differ");
  }
  ErrorSeries errors = FrameErrors(pred.poses, gt.poses);
  errors.frame_ids = pred.frame_ids;
  const ErrorSummary median = Summarize(errors, SummaryMode::kMedian);
  const ErrorSummary mean = Summarize(errors, SummaryMode::kMean);
  char line[160];
  std::snprintf(line, sizeof(line), "%.9g %.9g %.9g %.9g\n", median.trans,
                median.rot, mean.trans, mean.rot);
  out << "# median_t median_r mean_t mean_r\n" << line;

  if (!a.cdf.empty()) {
    const CdfCurve curve =
        Cdf(errors,
            a.cdf_component == "rot" ? ErrorComponent::kRotation
                                     : ErrorComponent::kTranslation,
            a.cdf_points);
    std::ofstream csv(a.cdf);
    if (!csv) throw Error(ErrorCode::kIo, "cannot write " + a.cdf);
    WriteCdfCsv(csv, curve);
    if (!csv) throw Error(ErrorCode::kIo, "write failed: " + a.cdf);
  }
  return kExitOk;
}

// --------------------------------------------------------------- gradcheck

struct GradcheckArgs {
  std::vector<std::string> suites;
  uint64_t seed = gradcheck::Options{}.seed;
  bool inject_sign_bug = false;
  std::string config;
};

void RegisterGradcheck(CLI::App* app, GradcheckArgs* a) {
  CLI::App* sub = app->add_subcommand(
      "gradcheck", "Compare analytic gradients with central differences");
  sub->add_option("--suites", a->suites, "Comma-separated: distance,losses,pgo")
      ->delimiter(',')
      ->check(CLI::IsMember(gradcheck::SuiteNames()))
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  sub->add_option("--seed", a->seed, "Seed for the sample points")
      ->capture_default_str();
  // Test fixture only.
  sub->add_flag("--inject-sign-bug", a->inject_sign_bug)->group("");
  sub->add_option("--config", a->config, "key=value file below the flags");
}

int ExecGradcheck(GradcheckArgs& a, std::ostream& out) {
  gradcheck::Options options;
  options.seed = a.seed;
  options.inject_sign_bug = a.inject_sign_bug;
  const std::vector<std::string> suites =
      a.suites.empty() ? gradcheck::SuiteNames() : a.suites;
  bool all_passed = true;
  for (const std::string& name : suites) {
    const gradcheck::SuiteResult r = gradcheck::RunSuite(name, options);
    char line[160];
    std::snprintf(line, sizeof(line), "%-9s points=%-4d max_rel_error=%.3e %s\n",
                  r.name.c_str(), r.points, r.max_rel_error,
                  r.passed ? "PASS" : "FAIL");
    out << line;
    all_passed = all_passed && r.passed;
  }
  return all_passed ? kExitOk : kExitCheckFailed;
}

// ------------------------------------------------------------ arg layering

bool HasFlag(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& arg) {
    return arg == flag || arg.rfind(flag + "=", 0) == 0;
  });
}

std::optional<std::string> FlagValue(const std::vector<std::string>& args,
                                     const std::string& flag) {
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == flag && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind(flag + "=", 0) == 0) return args[i].substr(flag.size() + 1);
  }
  return std::nullopt;
}

// Config-file values become flags placed before the user's own, so the
// user's flags win (options keep the last value). SEQPOSE_SEED is applied
// above the config file but still below an explicit --seed.
std::vector<std::string> LayerArgs(CLI::App& app, std::vector<std::string> args) {
  if (args.empty()) return args;
  CLI::App* sub = nullptr;
  for (CLI::App* candidate : app.get_subcommands({})) {
    if (candidate->get_name() == args.front()) sub = candidate;
  }
  if (sub == nullptr) return args;

  std::vector<std::string> user(args.begin() + 1, args.end());
  std::vector<std::string> layered = {args.front()};
  if (const auto path = FlagValue(user, "--config")) {
    const KeyValueFile cfg = KeyValueFile::Load(*path);
    for (const auto& [key, value] : cfg.values()) {
      std::string name = key;
      std::replace(name.begin(), name.end(), '_', '-');
      if (name == "config" || name == "output") continue;
      const CLI::Option* opt = sub->get_option_no_throw("--" + name);
      if (opt == nullptr || opt->get_expected_min() == 0) continue;
      layered.push_back("--" + name);
      layered.push_back(value);
    }
  }
  const char* env_seed = std::getenv(kSeedEnv);
  if (env_seed != nullptr && !HasFlag(user, "--seed") &&
      sub->get_option_no_throw("--seed") != nullptr) {
    layered.push_back("--seed");
    layered.push_back(env_seed);
  }
  layered.insert(layered.end(), user.begin(), user.end());
  return layered;
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
      return kExitIo;
    case ErrorCode::kFormat:
      return kExitFormat;
    default:
      return kExitUsage;
  }
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"seqpose: sequence-enhanced relocalization toolkit", "seqpose"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.set_version_flag("--version", SEQPOSE_VERSION);
  app.require_subcommand(1);

  SimulateArgs simulate;
  FuseArgs fuse;
  OptimizeArgs optimize;
  EvalArgs eval;
  GradcheckArgs gradcheck_args;
  RegisterSimulate(&app, &simulate);
  RegisterFuse(&app, &fuse);
  RegisterOptimize(&app, &optimize);
  RegisterEval(&app, &eval);
  RegisterGradcheck(&app, &gradcheck_args);

  try {
    std::vector<std::string> layered = LayerArgs(app, args);
    // CLI11 consumes the vector from the back.
    std::reverse(layered.begin(), layered.end());
    app.parse(layered);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const Error& e) {
    err << "seqpose: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "simulate") return ExecSimulate(simulate, out);
    if (command == "fuse") return ExecFuse(fuse, out);
    if (command == "optimize") return ExecOptimize(optimize, out);
    if (command == "eval") return ExecEval(eval, out);
    return ExecGradcheck(gradcheck_args, out);
  } catch (const Error& e) {
    err << "seqpose " << command << ": " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const fs::filesystem_error& e) {
    err << "seqpose " << command << ": " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace seqpose::cli
