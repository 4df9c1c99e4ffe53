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
#include "mqng/report.hpp"

#include "mqng/errors.hpp"
#include "mqng/version.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace mqng {

namespace {

struct HelpRequested {
    std::string text;
};

void resolve_defaults(RunSpec &spec, bool qubits_given, bool layers_given,
                      bool steps_given, bool digits_given,
                      bool patience_given) {
    const bool mvc = spec.problem == ProblemKind::MvcQaoa;
    if (spec.graph) {
        const int n = spec.graph->n_vertices;
        if (qubits_given && spec.n_qubits != n) {
            throw UsageError("--qubits " + std::to_string(spec.n_qubits) +
                             " contradicts the graph file (" +
                             std::to_string(n) + " vertices)");
        }
        spec.n_qubits = n;
    } else if (!qubits_given) {
        spec.n_qubits = mvc ? 4 : 6;
    }
    if (!layers_given) {
        spec.layers = mvc ? (spec.n_qubits >= 8 ? 6 : 4) : 3;
    }
    if (!steps_given) {
        spec.max_steps = mvc && spec.n_qubits >= 8 ? 300 : 200;
    }
    if (!digits_given) {
        spec.convergence_digits = mvc && spec.n_qubits < 8 ? 2 : 3;
    }
    if (!patience_given) {
        spec.convergence_patience = mvc ? 3 : 1;
    }
}

void validate_spec(const RunSpec &spec) {
    if (spec.n_qubits < 2 || spec.n_qubits > kMaxQubits) {
        throw UsageError("--qubits must be in [2, " +
                         std::to_string(kMaxQubits) + "]");
    }
    if (spec.layers < 1) {
        throw UsageError("--layers must be >= 1");
    }
    if (spec.eta_grid.empty()) {
        throw UsageError("at least one --eta value is required");
    }
    for (const double eta : spec.eta_grid) {
        if (!(eta > 0.0)) {
            throw UsageError("--eta values must be > 0");
        }
    }
    if (!(spec.rho >= 0.0 && spec.rho < 1.0)) {
        throw UsageError("--rho must be in [0, 1)");
    }
    if (!(spec.lambda >= 0.0)) {
        throw UsageError("--lambda must be >= 0");
    }
    if (spec.trials < 1) {
        throw UsageError("--trials must be >= 1");
    }
    if (spec.max_steps < 0) {
        throw UsageError("--max-steps must be >= 0");
    }
    if (spec.convergence_digits < 2 || spec.convergence_digits > 3) {
        throw UsageError("--digits must be 2 or 3");
    }
    if (spec.convergence_patience < 1) {
        throw UsageError("--patience must be >= 1");
    }
    if (spec.optimizers.empty()) {
        throw UsageError("--optimizers must name at least one optimizer");
    }
    if (spec.problem == ProblemKind::MvcQaoa && !(spec.penalty > 1.0)) {
        throw UsageError("--penalty must be > 1");
    }
}

std::ofstream open_output(const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    return out;
}

std::string csv_optional(const std::optional<double> &value) {
    return value ? format_double(*value) : std::string{};
}

} // namespace

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

RunSpec parse_args(const std::vector<std::string> &argv) {
    CLI::App app{"Momentum-QNG benchmark runner"};
    app.name("mqng");
    app.require_subcommand(1);

    CLI::App *run = app.add_subcommand(
        "run", "Run a seeded learning-rate sweep and write CSV/JSON results");

    std::string problem;
    run->add_option("--problem", problem, "benchmark problem")
        ->required()
        ->check(CLI::IsMember({"portfolio", "mvc"}));

    RunSpec spec;
    std::string optimizers_csv = "adam,momentum,qng,momentum_qng";
    std::string graph_path;
    std::string out_dir;

    CLI::Option *qubits_opt =
        run->add_option("--qubits", spec.n_qubits,
                        "problem size (default: 6 portfolio, 4 mvc)");
    CLI::Option *layers_opt = run->add_option(
        "--layers", spec.layers,
        "circuit depth (default: 3 portfolio; 4 mvc, 6 for mvc with >= 8 "
        "qubits)");
    run->add_option("--eta", spec.eta_grid,
                    "learning rates to sweep (default: grid 0.01..0.25)");
    run->add_option("--rho", spec.rho, "momentum coefficient")->capture_default_str();
    run->add_option("--lambda", spec.lambda, "metric regularizer")->capture_default_str();
    std::string metric_name = "block-diag";
    run->add_option("--metric", metric_name,
                    "metric approximation for QNG-family optimizers")
        ->check(CLI::IsMember({"full", "block-diag", "diag"}))
        ->capture_default_str();
    run->add_option("--trials", spec.trials, "trials per (optimizer, eta)")->capture_default_str();
    CLI::Option *steps_opt = run->add_option(
        "--max-steps", spec.max_steps,
        "step budget per trial (default: 200; 300 for mvc with >= 8 qubits)");
    CLI::Option *digits_opt = run->add_option(
        "--digits", spec.convergence_digits,
        "convergence accuracy in digits (default: 3; 2 for small mvc)");
    CLI::Option *patience_opt = run->add_option(
        "--patience", spec.convergence_patience,
        "steps the convergence threshold must hold (default: 1 portfolio, "
        "3 mvc)");
    run->add_option("--seed", spec.seed, "instance seed and first trial seed")->capture_default_str();
    run->add_option("--penalty", spec.penalty,
                    "uncovered-edge penalty (mvc only)")->capture_default_str();
    run->add_option("--optimizers", optimizers_csv,
                    "comma-separated subset of adam,momentum,qng,momentum_qng")->capture_default_str();
    run->add_option("--graph", graph_path,
                    "edge-list file: one 'u v' per line, '#' comments");
    run->add_option("--threads", spec.threads,
                    "worker threads (0 = hardware)")->capture_default_str();
    run->add_option("--adam-beta1", spec.adam_beta1, "Adam first-moment decay")->capture_default_str();
    run->add_option("--adam-beta2", spec.adam_beta2,
                    "Adam second-moment decay")->capture_default_str();
    run->add_option("--adam-eps", spec.adam_eps, "Adam epsilon")->capture_default_str();
    run->add_option("--out", out_dir,
                    "output directory (default: $MQNG_OUT_DIR or ./results)");

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp &e) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError &e) {
        throw UsageError(e.what());
    }

    spec.problem = problem == "mvc" ? ProblemKind::MvcQaoa
                                    : ProblemKind::PortfolioVqe;
    spec.metric_approx = metric_approx_from_string(metric_name);
    try {
        std::stringstream names(optimizers_csv);
        std::string name;
        spec.optimizers.clear();
        while (std::getline(names, name, ',')) {
            spec.optimizers.push_back(optimizer_kind_from_string(name));
        }
        if (!graph_path.empty()) {
            if (spec.problem != ProblemKind::MvcQaoa) {
                throw UsageError("--graph applies to the mvc problem only");
            }
            spec.graph = load_edge_list(graph_path);
        }
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }

    if (spec.eta_grid.empty()) {
        spec.eta_grid = default_eta_grid();
    }
    std::sort(spec.eta_grid.begin(), spec.eta_grid.end());
    spec.eta_grid.erase(
        std::unique(spec.eta_grid.begin(), spec.eta_grid.end()),
        spec.eta_grid.end());

    if (out_dir.empty()) {
        const char *env = std::getenv("MQNG_OUT_DIR");
        out_dir = env && *env ? env : "results";
    }
    spec.out_dir = out_dir;

    resolve_defaults(spec, qubits_opt->count() > 0, layers_opt->count() > 0,
                     steps_opt->count() > 0, digits_opt->count() > 0,
                     patience_opt->count() > 0);
    validate_spec(spec);
    return spec;
}

ProblemInstance build_instance(const RunSpec &spec) {
    if (spec.problem == ProblemKind::PortfolioVqe) {
        return build_portfolio(spec.n_qubits, spec.seed, spec.layers);
    }
    EdgeList graph;
    if (spec.graph) {
        graph = *spec.graph;
    } else if (spec.n_qubits == 4) {
        graph = default_graph_4();
    } else {
        graph = erdos_renyi_connected(spec.n_qubits, 0.5, spec.seed);
    }
    ProblemInstance instance = build_mvc(graph, spec.layers, spec.penalty);
    instance.seed = spec.seed;
    return instance;
}

SweepConfig sweep_config(const RunSpec &spec) {
    SweepConfig sweep;
    sweep.eta_grid = spec.eta_grid;
    sweep.n_trials = spec.trials;
    sweep.max_steps = spec.max_steps;
    sweep.convergence = {spec.convergence_digits, spec.convergence_patience};
    sweep.optimizers = spec.optimizers;
    sweep.base_seed = spec.seed;
    sweep.rho = spec.rho;
    sweep.lambda = spec.lambda;
    sweep.metric_approx = spec.metric_approx;
    sweep.adam_beta1 = spec.adam_beta1;
    sweep.adam_beta2 = spec.adam_beta2;
    sweep.adam_eps = spec.adam_eps;
    sweep.n_threads = spec.threads;
    return sweep;
}

std::vector<std::filesystem::path>
write_results(const BenchmarkReport &report,
              const std::filesystem::path &out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + out_dir.string() +
                      ": " + ec.message());
    }
    std::vector<std::filesystem::path> written;

    {
        const auto path = out_dir / "summary.csv";
        std::ofstream out = open_output(path);
        out << "optimizer,eta,mean_delta_e,std_delta_e,mean_steps,std_steps,"
               "mean_quality,std_quality\n";
        for (const AggregateRow &row : report.aggregates) {
            out << to_string(row.optimizer) << ',' << format_double(row.eta)
                << ',' << format_double(row.mean_delta_e) << ','
                << format_double(row.std_delta_e) << ','
                << format_double(row.mean_steps) << ','
                << format_double(row.std_steps) << ','
                << csv_optional(row.mean_quality) << ','
                << csv_optional(row.std_quality) << '\n';
        }
        written.push_back(path);
    }

    {
        const auto path = out_dir / "trials.csv";
        std::ofstream out = open_output(path);
        out << "optimizer,eta,seed,steps_taken,converged,final_energy,"
               "delta_e,quality\n";
        for (const TrialRecord &trial : report.trials) {
            out << to_string(trial.optimizer) << ','
                << format_double(trial.eta) << ',' << trial.seed << ','
                << trial.steps_taken << ',' << (trial.converged ? 1 : 0)
                << ',' << format_double(trial.final_energy) << ','
                << format_double(trial.delta_e) << ','
                << csv_optional(trial.quality) << '\n';
        }
        written.push_back(path);
    }

    // One CCDF table per (metric, optimizer), rows grouped by eta.
    const bool has_quality =
        !report.trials.empty() && report.trials.front().quality.has_value();
    const std::vector<std::string> metrics =
        has_quality ? std::vector<std::string>{"quality", "steps"}
                    : std::vector<std::string>{"delta_e", "steps"};

    std::vector<OptimizerKind> optimizers;
    std::vector<double> etas;
    for (const AggregateRow &row : report.aggregates) {
        if (std::find(optimizers.begin(), optimizers.end(), row.optimizer) ==
            optimizers.end()) {
            optimizers.push_back(row.optimizer);
        }
        if (std::find(etas.begin(), etas.end(), row.eta) == etas.end()) {
            etas.push_back(row.eta);
        }
    }

    for (const std::string &metric : metrics) {
        for (const OptimizerKind optimizer : optimizers) {
            const auto path =
                out_dir / ("ccdf_" + metric + "_" + to_string(optimizer) +
                           ".csv");
            std::ofstream out = open_output(path);
            out << "eta,threshold,probability\n";
            for (const double eta : etas) {
                std::vector<double> values;
                for (const TrialRecord &trial : report.trials) {
                    if (trial.optimizer != optimizer || trial.eta != eta) {
                        continue;
                    }
                    if (metric == "steps") {
                        values.push_back(
                            static_cast<double>(trial.steps_taken));
                    } else if (metric == "quality") {
                        values.push_back(trial.quality.value_or(0.0));
                    } else {
                        values.push_back(trial.delta_e);
                    }
                }
                if (values.empty()) {
                    continue;
                }
                for (const auto &[threshold, probability] : ccdf(values)) {
                    out << format_double(eta) << ','
                        << format_double(threshold) << ','
                        << format_double(probability) << '\n';
                }
            }
            written.push_back(path);
        }
    }

    {
        const auto path = out_dir / "manifest.json";
        std::ofstream out = open_output(path);
        out << report.manifest.dump(2) << '\n';
        written.push_back(path);
    }
    return written;
}

int run_main(int argc, const char *const *argv) {
    try {
        const std::vector<std::string> args(argv + 1, argv + argc);
        RunSpec spec;
        try {
            spec = parse_args(args);
        } catch (const HelpRequested &help) {
            std::cout << help.text;
            return kExitOk;
        }
        const ProblemInstance instance = build_instance(spec);
        const BenchmarkReport report =
            run_sweep(instance, sweep_config(spec));
        const auto files = write_results(report, spec.out_dir);
        for (const auto &file : files) {
            std::cout << file.string() << '\n';
        }
        return kExitOk;
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError &e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kExitIo;
    } catch (const NumericalError &e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

} // namespace mqng
