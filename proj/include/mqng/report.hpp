// Copyright 2026 The mqng Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include "mqng/harness.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace mqng {

/// Fully validated configuration of one `run` invocation, with all
/// problem-dependent defaults resolved.
struct RunSpec {
    ProblemKind problem = ProblemKind::PortfolioVqe;
    int n_qubits = 0;
    int layers = 0;
    std::vector<OptimizerKind> optimizers;
    std::vector<double> eta_grid;
    double rho = 0.9;
    double lambda = 1e-8;
    MetricApprox metric_approx = MetricApprox::BlockDiag;
    int trials = 200;
    int max_steps = 0;
    int convergence_digits = 0;
    int convergence_patience = 0;
    std::uint64_t seed = 42;
    double penalty = 2.0;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.99;
    double adam_eps = 1e-8;
    int threads = 0;
    std::optional<EdgeList> graph; // loaded when --graph is given
    std::filesystem::path out_dir;
};

/// Parses `run ...` arguments (without the program name). Unknown flags and
/// invalid values raise UsageError.
RunSpec parse_args(const std::vector<std::string> &argv);

ProblemInstance build_instance(const RunSpec &spec);

SweepConfig sweep_config(const RunSpec &spec);

/// Writes summary.csv, trials.csv, per-metric/per-optimizer CCDF tables and
/// manifest.json into `out_dir` (created if missing). Output is a pure
/// function of the report, so identical runs emit byte-identical files.
std::vector<std::filesystem::path>
write_results(const BenchmarkReport &report,
              const std::filesystem::path &out_dir);

/// Shortest-width formatting at 17 significant digits; round-trips exactly.
std::string format_double(double value);

/// Full CLI entry point; returns a process exit code.
int run_main(int argc, const char *const *argv);

} // namespace mqng
