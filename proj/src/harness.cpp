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
#include "mqng/harness.hpp"

#include "mqng/errors.hpp"
#include "mqng/rng.hpp"
#include "mqng/version.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace mqng {

namespace {

bool all_finite(std::span<const double> values) {
    return std::all_of(values.begin(), values.end(),
                       [](double v) { return std::isfinite(v); });
}

double population_std(std::span<const double> values, double mean) {
    double sum_sq = 0.0;
    for (double v : values) {
        const double centered = v - mean;
        sum_sq += centered * centered;
    }
    return std::sqrt(std::max(0.0, sum_sq / static_cast<double>(values.size())));
}

double mean_of(std::span<const double> values) {
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    return sum / static_cast<double>(values.size());
}

nlohmann::json hamiltonian_to_json(const PauliHamiltonian &h) {
    nlohmann::json terms = nlohmann::json::array();
    for (const PauliTerm &term : h.terms) {
        terms.push_back({{"coefficient", term.coefficient},
                         {"support", term.support()}});
    }
    return {{"terms", terms}, {"constant_offset", h.constant_offset}};
}

nlohmann::json instance_to_json(const ProblemInstance &instance) {
    nlohmann::json j{{"kind", to_string(instance.kind)},
                     {"n_qubits", instance.circuit.n_qubits},
                     {"n_params", instance.circuit.n_params},
                     {"layers", instance.n_layers},
                     {"seed", instance.seed},
                     {"hamiltonian", hamiltonian_to_json(instance.hamiltonian)},
                     {"ground_energy", instance.ground_energy},
                     {"solution_states", instance.solution_states}};
    if (instance.kind == ProblemKind::MvcQaoa) {
        nlohmann::json edges = nlohmann::json::array();
        for (const auto &[u, v] : instance.graph.edges) {
            edges.push_back({u, v});
        }
        j["graph"] = {{"n_vertices", instance.graph.n_vertices},
                      {"edges", edges}};
        j["penalty"] = instance.penalty;
    }
    return j;
}

// Executes tasks 0..n-1 on up to n_threads workers; results are keyed by
// task index, so scheduling cannot affect the output.
template <typename Fn>
void parallel_for(std::size_t n_tasks, int n_threads, Fn &&fn) {
    int workers = n_threads > 0
                      ? n_threads
                      : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min<int>(workers,
                                        static_cast<int>(n_tasks)));
    if (workers == 1) {
        for (std::size_t i = 0; i < n_tasks; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n_tasks;
                 i = next.fetch_add(1)) {
                fn(i);
            }
        });
    }
    for (std::thread &t : pool) {
        t.join();
    }
}

} // namespace

void SweepConfig::validate() const {
    if (eta_grid.empty()) {
        throw std::invalid_argument("eta grid is empty");
    }
    if (!std::is_sorted(eta_grid.begin(), eta_grid.end())) {
        throw std::invalid_argument("eta grid must be sorted ascending");
    }
    for (double eta : eta_grid) {
        if (!(eta > 0.0)) {
            throw std::invalid_argument("eta values must be > 0");
        }
    }
    if (n_trials < 1) {
        throw std::invalid_argument("n_trials must be >= 1");
    }
    if (max_steps < 0) {
        throw std::invalid_argument("max_steps must be >= 0");
    }
    if (convergence.patience < 1) {
        throw std::invalid_argument("convergence patience must be >= 1");
    }
    if (optimizers.empty()) {
        throw std::invalid_argument("optimizer list is empty");
    }
}

std::vector<double> initial_angles(std::uint64_t seed, int d) {
    auto rng = seeded_engine(seed, SeedStream::kInitialAngles);
    std::vector<double> angles(d);
    for (double &angle : angles) {
        angle = 2.0 * std::numbers::pi * uniform_unit(rng);
    }
    return angles;
}

bool check_convergence(std::span<const double> trace, int digits,
                       int patience) {
    if (trace.size() < static_cast<std::size_t>(patience) + 1) {
        return false;
    }
    const double threshold = std::pow(10.0, -digits);
    for (std::size_t k = trace.size() - patience; k < trace.size(); ++k) {
        if (!(std::abs(trace[k] - trace[k - 1]) < threshold)) {
            return false;
        }
    }
    return true;
}

TrialRecord run_trial(const ProblemInstance &instance,
                      const OptimizerConfig &cfg, int max_steps,
                      const ConvergenceSpec &convergence, std::uint64_t seed) {
    cfg.validate();
    const Circuit &circuit = instance.circuit;
    const int d = circuit.n_params;

    TrialRecord record;
    record.optimizer = cfg.kind;
    record.eta = cfg.eta;
    record.seed = seed;

    std::vector<double> theta = initial_angles(seed, d);
    OptimizerState state = OptimizerState::zeros(d);

    StateJacobian jac = jacobian(circuit, theta);
    Statevector final_state = jac.base_state;
    record.energy_trace.push_back(expectation(jac.base_state,
                                              instance.hamiltonian));

    bool diverged = false;
    for (int step = 1; step <= max_steps; ++step) {
        std::vector<double> delta;
        try {
            const std::vector<double> grad =
                energy_gradient(jac, instance.hamiltonian);
            if (uses_metric(cfg.kind)) {
                const MetricTensor metric = approximate_metric(
                    quantum_geometric_tensor(jac, cfg.lambda),
                    cfg.metric_approx, circuit.param_blocks);
                delta = cfg.kind == OptimizerKind::Qng
                            ? qng_step(grad, metric, cfg.eta)
                            : momentum_qng_step(state, grad, metric, cfg);
            } else {
                delta = cfg.kind == OptimizerKind::Momentum
                            ? momentum_step(state, grad, cfg)
                            : adam_step(state, grad, cfg);
            }
        } catch (const NumericalError &) {
            diverged = true;
            break;
        }
        for (int i = 0; i < d; ++i) {
            theta[i] += delta[i];
        }
        if (!all_finite(theta)) {
            diverged = true;
            break;
        }
        jac = jacobian(circuit, theta);
        const double energy = expectation(jac.base_state, instance.hamiltonian);
        if (!std::isfinite(energy)) {
            diverged = true;
            break;
        }
        record.energy_trace.push_back(energy);
        final_state = jac.base_state;
        record.steps_taken = step;
        if (check_convergence(record.energy_trace, convergence.digits,
                              convergence.patience)) {
            record.converged = true;
            break;
        }
    }

    if (!record.converged || diverged) {
        record.converged = false;
        record.steps_taken = max_steps;
    }
    record.final_energy = record.energy_trace.back();
    record.delta_e = record.final_energy - instance.ground_energy;
    if (instance.kind == ProblemKind::MvcQaoa) {
        record.quality = quality_ratio(final_state, instance.solution_states);
    }
    return record;
}

BenchmarkReport run_sweep(const ProblemInstance &instance,
                          const SweepConfig &sweep) {
    sweep.validate();

    struct Task {
        OptimizerKind optimizer;
        double eta;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    tasks.reserve(sweep.optimizers.size() * sweep.eta_grid.size() *
                  sweep.n_trials);
    for (OptimizerKind optimizer : sweep.optimizers) {
        for (double eta : sweep.eta_grid) {
            for (int trial = 0; trial < sweep.n_trials; ++trial) {
                tasks.push_back(
                    {optimizer, eta,
                     sweep.base_seed + static_cast<std::uint64_t>(trial)});
            }
        }
    }

    BenchmarkReport report;
    report.trials.resize(tasks.size());
    parallel_for(tasks.size(), sweep.n_threads, [&](std::size_t i) {
        const Task &task = tasks[i];
        OptimizerConfig cfg;
        cfg.kind = task.optimizer;
        cfg.eta = task.eta;
        cfg.rho = sweep.rho;
        cfg.lambda = sweep.lambda;
        cfg.metric_approx = sweep.metric_approx;
        cfg.adam_beta1 = sweep.adam_beta1;
        cfg.adam_beta2 = sweep.adam_beta2;
        cfg.adam_eps = sweep.adam_eps;
        try {
            report.trials[i] = run_trial(instance, cfg, sweep.max_steps,
                                         sweep.convergence, task.seed);
        } catch (const std::exception &) {
            // A trial must never abort the sweep; record it as diverged at
            // the initial point.
            TrialRecord fallback;
            fallback.optimizer = task.optimizer;
            fallback.eta = task.eta;
            fallback.seed = task.seed;
            fallback.steps_taken = sweep.max_steps;
            fallback.converged = false;
            const Statevector start = evaluate(
                instance.circuit,
                initial_angles(task.seed, instance.circuit.n_params));
            fallback.energy_trace.push_back(
                expectation(start, instance.hamiltonian));
            fallback.final_energy = fallback.energy_trace.back();
            fallback.delta_e = fallback.final_energy - instance.ground_energy;
            if (instance.kind == ProblemKind::MvcQaoa) {
                fallback.quality =
                    quality_ratio(start, instance.solution_states);
            }
            report.trials[i] = fallback;
        }
    });

    const bool has_quality = instance.kind == ProblemKind::MvcQaoa;
    std::size_t offset = 0;
    for (OptimizerKind optimizer : sweep.optimizers) {
        for (double eta : sweep.eta_grid) {
            std::vector<double> delta_es;
            std::vector<double> steps;
            std::vector<double> qualities;
            for (int trial = 0; trial < sweep.n_trials; ++trial) {
                const TrialRecord &record = report.trials[offset + trial];
                delta_es.push_back(record.delta_e);
                steps.push_back(static_cast<double>(record.steps_taken));
                if (record.quality) {
                    qualities.push_back(*record.quality);
                }
            }
            offset += sweep.n_trials;

            AggregateRow row;
            row.optimizer = optimizer;
            row.eta = eta;
            row.n_trials = sweep.n_trials;
            row.mean_delta_e = mean_of(delta_es);
            row.std_delta_e = population_std(delta_es, row.mean_delta_e);
            row.mean_steps = mean_of(steps);
            row.std_steps = population_std(steps, row.mean_steps);
            if (has_quality && !qualities.empty()) {
                row.mean_quality = mean_of(qualities);
                row.std_quality = population_std(qualities, *row.mean_quality);
            }
            report.aggregates.push_back(row);
        }
    }

    std::vector<std::string> optimizer_names;
    for (OptimizerKind optimizer : sweep.optimizers) {
        optimizer_names.push_back(to_string(optimizer));
    }
    report.manifest = {
        {"version", std::string(kVersion)},
        {"problem", instance_to_json(instance)},
        {"sweep",
         {{"optimizers", optimizer_names},
          {"eta_grid", sweep.eta_grid},
          {"n_trials", sweep.n_trials},
          {"max_steps", sweep.max_steps},
          {"convergence_digits", sweep.convergence.digits},
          {"convergence_patience", sweep.convergence.patience},
          {"base_seed", sweep.base_seed},
          {"trial_seeds",
           {{"first", sweep.base_seed},
            {"last", sweep.base_seed +
                         static_cast<std::uint64_t>(sweep.n_trials) - 1}}},
          {"rho", sweep.rho},
          {"lambda", sweep.lambda},
          {"metric_approx", to_string(sweep.metric_approx)},
          {"adam_beta1", sweep.adam_beta1},
          {"adam_beta2", sweep.adam_beta2},
          {"adam_eps", sweep.adam_eps}}},
        {"conventions",
         {{"qubit_order", "qubit 0 is the least significant basis-index bit"},
          {"rotations", "R(theta) = exp(-i theta/2 * generator)"},
          {"qaoa_parameters", "interleaved (gamma_1, beta_1, ...)"},
          {"metric", "exact quantum geometric tensor masked per "
                     "metric_approx, Tikhonov shift lambda; Cholesky solve, "
                     "eigendecomposition fallback"},
          {"loss", "raw expectation value <psi|H|psi>, no 1/2 factor"},
          {"initial_angles", "uniform [0, 2pi)^d per trial seed"},
          {"steps_aggregation",
           "non-converged and diverged trials censored at max_steps"},
          {"std", "population standard deviation"}}}};
    return report;
}

std::vector<std::pair<double, double>> ccdf(std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("ccdf of an empty sample");
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    std::vector<std::pair<double, double>> curve;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0 && sorted[i] == sorted[i - 1]) {
            continue;
        }
        // All samples from position i upward are >= sorted[i].
        curve.emplace_back(sorted[i],
                           static_cast<double>(sorted.size() - i) / n);
    }
    return curve;
}

std::vector<double> default_eta_grid() {
    return {0.01, 0.025, 0.05, 0.075, 0.1, 0.125, 0.15, 0.175, 0.2, 0.225,
            0.25};
}

} // namespace mqng
