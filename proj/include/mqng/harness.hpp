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

#include "mqng/optimizer.hpp"
#include "mqng/problem.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mqng {

/// Stop once the last `patience` successive energy differences are all
/// below 10^-digits.
struct ConvergenceSpec {
    int digits = 3;
    int patience = 1;
};

struct TrialRecord {
    OptimizerKind optimizer = OptimizerKind::MomentumQng;
    double eta = 0.0;
    std::uint64_t seed = 0;
    int steps_taken = 0;
    bool converged = false;
    double final_energy = 0.0;
    double delta_e = 0.0;               // final_energy - ground_energy
    std::optional<double> quality;      // MVC only
    std::vector<double> energy_trace;   // finite prefix, starts at E(theta_0)
};

struct SweepConfig {
    std::vector<double> eta_grid;
    int n_trials = 200;
    int max_steps = 200;
    ConvergenceSpec convergence;
    std::vector<OptimizerKind> optimizers;
    std::uint64_t base_seed = 42;
    double rho = 0.9;
    double lambda = 1e-8;
    MetricApprox metric_approx = MetricApprox::BlockDiag;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.99;
    double adam_eps = 1e-8;
    int n_threads = 0; // 0 = hardware concurrency

    void validate() const;
};

/// Per-(optimizer, eta) aggregate over n trials. Standard deviations are
/// population standard deviations so a single trial reports std = 0.
struct AggregateRow {
    OptimizerKind optimizer = OptimizerKind::MomentumQng;
    double eta = 0.0;
    int n_trials = 0;
    double mean_delta_e = 0.0;
    double std_delta_e = 0.0;
    double mean_steps = 0.0;
    double std_steps = 0.0;
    std::optional<double> mean_quality;
    std::optional<double> std_quality;
};

struct BenchmarkReport {
    std::vector<AggregateRow> aggregates;
    std::vector<TrialRecord> trials;
    nlohmann::json manifest;
};

/// theta_0 ~ uniform [0, 2 pi)^d, a pure function of the trial seed.
std::vector<double> initial_angles(std::uint64_t seed, int d);

/// True iff the last `patience` successive differences of the trace are all
/// below 10^-digits. A trace shorter than patience + 1 never converged.
bool check_convergence(std::span<const double> trace, int digits,
                       int patience);

/// One seeded optimization run. Non-finite energies or failed metric solves
/// mark the trial diverged (converged = false, steps_taken = max_steps,
/// delta_e from the last finite energy) instead of raising.
TrialRecord run_trial(const ProblemInstance &instance,
                      const OptimizerConfig &cfg, int max_steps,
                      const ConvergenceSpec &convergence, std::uint64_t seed);

/// Runs every (optimizer, eta, seed) trial; the same seed reuses the same
/// theta_0 for every optimizer and eta. Deterministic given base_seed,
/// independent of thread count.
BenchmarkReport run_sweep(const ProblemInstance &instance,
                          const SweepConfig &sweep);

/// Complementary cumulative distribution: for each distinct value v in
/// ascending order, the fraction of samples >= v. Starts at 1, monotone
/// non-increasing.
std::vector<std::pair<double, double>> ccdf(std::span<const double> values);

/// Default learning-rate grid spanning 0.01 to 0.25.
std::vector<double> default_eta_grid();

} // namespace mqng
