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
#include "mqng/report.hpp"
#include "mqng/version.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;

PYBIND11_MODULE(mqng, m) {
    m.doc() = "Momentum-QNG optimizers for variational quantum circuits on "
              "an exact statevector simulator";
    m.attr("__version__") = std::string(mqng::kVersion);

    py::class_<mqng::Statevector>(m, "Statevector")
        .def(py::init<int>(), py::arg("n_qubits"))
        .def(py::init<int, std::vector<mqng::Complex>>(), py::arg("n_qubits"),
             py::arg("amplitudes"))
        .def_property_readonly("n_qubits", &mqng::Statevector::n_qubits)
        .def_property_readonly("dim", &mqng::Statevector::dim)
        .def_property_readonly(
            "amplitudes",
            [](const mqng::Statevector &s) { return s.amplitudes(); })
        .def("norm", &mqng::Statevector::norm)
        .def("__getitem__",
             [](const mqng::Statevector &s, std::size_t i) {
                 if (i >= s.dim()) {
                     throw py::index_error();
                 }
                 return s[i];
             })
        .def("__len__", &mqng::Statevector::dim);

    py::enum_<mqng::GateKind>(m, "GateKind")
        .value("RX", mqng::GateKind::RX)
        .value("RY", mqng::GateKind::RY)
        .value("RZ", mqng::GateKind::RZ)
        .value("RZZ", mqng::GateKind::RZZ)
        .value("H", mqng::GateKind::H)
        .value("CNOT", mqng::GateKind::CNOT)
        .value("PauliRotation", mqng::GateKind::PauliRotation);

    py::class_<mqng::Gate>(m, "Gate")
        .def_static("rx", &mqng::Gate::rx, py::arg("qubit"), py::arg("param"),
                    py::arg("coefficient") = 1.0)
        .def_static("ry", &mqng::Gate::ry, py::arg("qubit"), py::arg("param"),
                    py::arg("coefficient") = 1.0)
        .def_static("rz", &mqng::Gate::rz, py::arg("qubit"), py::arg("param"),
                    py::arg("coefficient") = 1.0)
        .def_static("rzz", &mqng::Gate::rzz, py::arg("q0"), py::arg("q1"),
                    py::arg("param"), py::arg("coefficient") = 1.0)
        .def_static("pauli_rotation", &mqng::Gate::pauli_rotation,
                    py::arg("support"), py::arg("param"),
                    py::arg("coefficient") = 1.0)
        .def_static("h", &mqng::Gate::h, py::arg("qubit"))
        .def_static("cnot", &mqng::Gate::cnot, py::arg("control"),
                    py::arg("target"))
        .def_readonly("kind", &mqng::Gate::kind)
        .def_readonly("targets", &mqng::Gate::targets);

    py::class_<mqng::PauliHamiltonian>(m, "PauliHamiltonian")
        .def(py::init<>())
        .def("add_term",
             [](mqng::PauliHamiltonian &h, double coefficient,
                const std::vector<int> &support) {
                 h.add_term(coefficient, support);
             },
             py::arg("coefficient"), py::arg("support"))
        .def("add_z", &mqng::PauliHamiltonian::add_z, py::arg("qubit"),
             py::arg("coefficient"))
        .def("add_zz", &mqng::PauliHamiltonian::add_zz, py::arg("q0"),
             py::arg("q1"), py::arg("coefficient"))
        .def_readwrite("constant_offset",
                       &mqng::PauliHamiltonian::constant_offset)
        .def_property_readonly("terms", [](const mqng::PauliHamiltonian &h) {
            std::vector<std::pair<double, std::vector<int>>> terms;
            for (const auto &term : h.terms) {
                terms.emplace_back(term.coefficient, term.support());
            }
            return terms;
        });

    m.def("new_zero_state", &mqng::new_zero_state, py::arg("n_qubits"));
    m.def(
        "apply_gate",
        [](const mqng::Statevector &state, const mqng::Gate &gate,
           const std::vector<double> &params) {
            return mqng::apply_gate(state, gate, params);
        },
        py::arg("state"), py::arg("gate"),
        py::arg("params") = std::vector<double>{});
    m.def("inner_product", &mqng::inner_product, py::arg("a"), py::arg("b"));
    m.def("expectation", &mqng::expectation, py::arg("state"), py::arg("h"));
    m.def("hamiltonian_diagonal", &mqng::hamiltonian_diagonal, py::arg("h"),
          py::arg("n_qubits"));
    m.def("apply_hamiltonian", &mqng::apply_hamiltonian, py::arg("h"),
          py::arg("state"));

    py::class_<mqng::EdgeList>(m, "EdgeList")
        .def(py::init<>())
        .def(py::init([](int n_vertices,
                         const std::vector<std::pair<int, int>> &edges) {
                 return mqng::EdgeList{n_vertices, edges};
             }),
             py::arg("n_vertices"), py::arg("edges"))
        .def_readwrite("n_vertices", &mqng::EdgeList::n_vertices)
        .def_readwrite("edges", &mqng::EdgeList::edges);
    m.def("load_edge_list", &mqng::load_edge_list, py::arg("path"));
    m.def("is_connected", &mqng::is_connected, py::arg("graph"));
    m.def("erdos_renyi_connected", &mqng::erdos_renyi_connected,
          py::arg("n_vertices"), py::arg("edge_probability"), py::arg("seed"));
    m.def("default_graph_4", &mqng::default_graph_4);

    py::class_<mqng::Circuit>(m, "Circuit")
        .def_readonly("n_qubits", &mqng::Circuit::n_qubits)
        .def_readonly("n_params", &mqng::Circuit::n_params)
        .def_readonly("param_blocks", &mqng::Circuit::param_blocks)
        .def_property_readonly(
            "n_gates",
            [](const mqng::Circuit &c) { return c.gates.size(); });
    m.def("build_vqe_ansatz", &mqng::build_vqe_ansatz, py::arg("n_qubits"),
          py::arg("n_layers"));
    m.def("build_qaoa_circuit", &mqng::build_qaoa_circuit, py::arg("graph"),
          py::arg("n_layers"), py::arg("cost_h"));
    m.def(
        "evaluate",
        [](const mqng::Circuit &circuit, const std::vector<double> &params) {
            return mqng::evaluate(circuit, params);
        },
        py::arg("circuit"), py::arg("params"));

    py::class_<mqng::StateJacobian>(m, "StateJacobian")
        .def_readonly("base_state", &mqng::StateJacobian::base_state)
        .def_readonly("columns", &mqng::StateJacobian::columns);
    m.def(
        "jacobian",
        [](const mqng::Circuit &circuit, const std::vector<double> &params) {
            return mqng::jacobian(circuit, params);
        },
        py::arg("circuit"), py::arg("params"));
    m.def(
        "energy_gradient",
        [](const mqng::Circuit &circuit, const std::vector<double> &params,
           const mqng::PauliHamiltonian &h) {
            return mqng::energy_gradient(circuit, params, h);
        },
        py::arg("circuit"), py::arg("params"), py::arg("h"));

    py::class_<mqng::MetricTensor>(m, "MetricTensor")
        .def(py::init<>())
        .def_static("identity", &mqng::MetricTensor::identity, py::arg("d"),
                    py::arg("lambda") = 0.0)
        .def_readwrite("qgt", &mqng::MetricTensor::qgt)
        .def_readwrite("fubini_study", &mqng::MetricTensor::fubini_study)
        .def_readwrite("lambda_", &mqng::MetricTensor::lambda);
    m.def("quantum_geometric_tensor", &mqng::quantum_geometric_tensor,
          py::arg("jac"), py::arg("lambda") = 0.0);
    py::enum_<mqng::MetricApprox>(m, "MetricApprox")
        .value("Full", mqng::MetricApprox::Full)
        .value("BlockDiag", mqng::MetricApprox::BlockDiag)
        .value("Diag", mqng::MetricApprox::Diag);
    m.def(
        "approximate_metric",
        [](const mqng::MetricTensor &metric, mqng::MetricApprox approx,
           const std::vector<int> &blocks) {
            return mqng::approximate_metric(metric, approx, blocks);
        },
        py::arg("metric"), py::arg("approx"),
        py::arg("blocks") = std::vector<int>{});
    m.def(
        "natural_direction",
        [](const mqng::MetricTensor &metric, const std::vector<double> &grad) {
            return mqng::natural_direction(metric, grad);
        },
        py::arg("metric"), py::arg("grad"));

    py::enum_<mqng::OptimizerKind>(m, "OptimizerKind")
        .value("Adam", mqng::OptimizerKind::Adam)
        .value("Momentum", mqng::OptimizerKind::Momentum)
        .value("Qng", mqng::OptimizerKind::Qng)
        .value("MomentumQng", mqng::OptimizerKind::MomentumQng);

    py::class_<mqng::OptimizerConfig>(m, "OptimizerConfig")
        .def(py::init<>())
        .def_readwrite("kind", &mqng::OptimizerConfig::kind)
        .def_readwrite("eta", &mqng::OptimizerConfig::eta)
        .def_readwrite("rho", &mqng::OptimizerConfig::rho)
        .def_readwrite("adam_beta1", &mqng::OptimizerConfig::adam_beta1)
        .def_readwrite("adam_beta2", &mqng::OptimizerConfig::adam_beta2)
        .def_readwrite("adam_eps", &mqng::OptimizerConfig::adam_eps)
        .def_readwrite("lambda_", &mqng::OptimizerConfig::lambda)
        .def_readwrite("metric_approx", &mqng::OptimizerConfig::metric_approx);

    py::class_<mqng::OptimizerState>(m, "OptimizerState")
        .def_static("zeros", &mqng::OptimizerState::zeros, py::arg("d"))
        .def_readwrite("delta", &mqng::OptimizerState::delta)
        .def_readwrite("force", &mqng::OptimizerState::force)
        .def_readwrite("adam_m", &mqng::OptimizerState::adam_m)
        .def_readwrite("adam_v", &mqng::OptimizerState::adam_v)
        .def_readwrite("step_count", &mqng::OptimizerState::step_count);

    py::class_<mqng::LangevinParams>(m, "LangevinParams")
        .def(py::init([](double gamma, double dt) {
                 return mqng::LangevinParams{gamma, dt};
             }),
             py::arg("gamma"), py::arg("dt"))
        .def_readwrite("gamma", &mqng::LangevinParams::gamma)
        .def_readwrite("dt", &mqng::LangevinParams::dt);
    m.def("langevin_to_hyperparams", &mqng::langevin_to_hyperparams,
          py::arg("params"));
    m.def("hyperparams_to_langevin", &mqng::hyperparams_to_langevin,
          py::arg("rho"), py::arg("eta"));

    m.def(
        "momentum_step",
        [](mqng::OptimizerState &state, const std::vector<double> &grad,
           const mqng::OptimizerConfig &cfg) {
            return mqng::momentum_step(state, grad, cfg);
        },
        py::arg("state"), py::arg("grad"), py::arg("cfg"));
    m.def(
        "qng_step",
        [](const std::vector<double> &grad, const mqng::MetricTensor &metric,
           double eta) { return mqng::qng_step(grad, metric, eta); },
        py::arg("grad"), py::arg("metric"), py::arg("eta"));
    m.def(
        "momentum_qng_step",
        [](mqng::OptimizerState &state, const std::vector<double> &grad,
           const mqng::MetricTensor &metric, const mqng::OptimizerConfig &cfg) {
            return mqng::momentum_qng_step(state, grad, metric, cfg);
        },
        py::arg("state"), py::arg("grad"), py::arg("metric"), py::arg("cfg"));
    m.def(
        "adam_step",
        [](mqng::OptimizerState &state, const std::vector<double> &grad,
           const mqng::OptimizerConfig &cfg) {
            return mqng::adam_step(state, grad, cfg);
        },
        py::arg("state"), py::arg("grad"), py::arg("cfg"));

    py::enum_<mqng::ProblemKind>(m, "ProblemKind")
        .value("PortfolioVqe", mqng::ProblemKind::PortfolioVqe)
        .value("MvcQaoa", mqng::ProblemKind::MvcQaoa);

    py::class_<mqng::ProblemInstance>(m, "ProblemInstance")
        .def_readonly("kind", &mqng::ProblemInstance::kind)
        .def_readonly("hamiltonian", &mqng::ProblemInstance::hamiltonian)
        .def_readonly("circuit", &mqng::ProblemInstance::circuit)
        .def_readonly("ground_energy", &mqng::ProblemInstance::ground_energy)
        .def_readonly("solution_states",
                      &mqng::ProblemInstance::solution_states)
        .def_readonly("seed", &mqng::ProblemInstance::seed)
        .def_readonly("n_layers", &mqng::ProblemInstance::n_layers)
        .def_readonly("graph", &mqng::ProblemInstance::graph)
        .def_readonly("penalty", &mqng::ProblemInstance::penalty);
    m.def("build_portfolio", &mqng::build_portfolio, py::arg("n_qubits"),
          py::arg("seed"), py::arg("n_layers") = 3);
    m.def("build_portfolio_from_couplings",
          &mqng::build_portfolio_from_couplings, py::arg("n_qubits"),
          py::arg("couplings"), py::arg("fields"), py::arg("n_layers") = 3);
    m.def("build_mvc", &mqng::build_mvc, py::arg("graph"), py::arg("n_layers"),
          py::arg("penalty") = 2.0);
    m.def("mvc_hamiltonian", &mqng::mvc_hamiltonian, py::arg("graph"),
          py::arg("penalty"));
    m.def("exact_solve", &mqng::exact_solve, py::arg("h"), py::arg("n_qubits"));
    m.def("quality_ratio", &mqng::quality_ratio, py::arg("state"),
          py::arg("solution_states"));

    py::class_<mqng::ConvergenceSpec>(m, "ConvergenceSpec")
        .def(py::init([](int digits, int patience) {
                 return mqng::ConvergenceSpec{digits, patience};
             }),
             py::arg("digits") = 3, py::arg("patience") = 1)
        .def_readwrite("digits", &mqng::ConvergenceSpec::digits)
        .def_readwrite("patience", &mqng::ConvergenceSpec::patience);

    py::class_<mqng::TrialRecord>(m, "TrialRecord")
        .def_readonly("optimizer", &mqng::TrialRecord::optimizer)
        .def_readonly("eta", &mqng::TrialRecord::eta)
        .def_readonly("seed", &mqng::TrialRecord::seed)
        .def_readonly("steps_taken", &mqng::TrialRecord::steps_taken)
        .def_readonly("converged", &mqng::TrialRecord::converged)
        .def_readonly("final_energy", &mqng::TrialRecord::final_energy)
        .def_readonly("delta_e", &mqng::TrialRecord::delta_e)
        .def_readonly("quality", &mqng::TrialRecord::quality)
        .def_readonly("energy_trace", &mqng::TrialRecord::energy_trace);

    py::class_<mqng::SweepConfig>(m, "SweepConfig")
        .def(py::init<>())
        .def_readwrite("eta_grid", &mqng::SweepConfig::eta_grid)
        .def_readwrite("n_trials", &mqng::SweepConfig::n_trials)
        .def_readwrite("max_steps", &mqng::SweepConfig::max_steps)
        .def_readwrite("convergence", &mqng::SweepConfig::convergence)
        .def_readwrite("optimizers", &mqng::SweepConfig::optimizers)
        .def_readwrite("base_seed", &mqng::SweepConfig::base_seed)
        .def_readwrite("rho", &mqng::SweepConfig::rho)
        .def_readwrite("lambda_", &mqng::SweepConfig::lambda)
        .def_readwrite("metric_approx", &mqng::SweepConfig::metric_approx)
        .def_readwrite("adam_beta1", &mqng::SweepConfig::adam_beta1)
        .def_readwrite("adam_beta2", &mqng::SweepConfig::adam_beta2)
        .def_readwrite("adam_eps", &mqng::SweepConfig::adam_eps)
        .def_readwrite("n_threads", &mqng::SweepConfig::n_threads);

    py::class_<mqng::AggregateRow>(m, "AggregateRow")
        .def_readonly("optimizer", &mqng::AggregateRow::optimizer)
        .def_readonly("eta", &mqng::AggregateRow::eta)
        .def_readonly("n_trials", &mqng::AggregateRow::n_trials)
        .def_readonly("mean_delta_e", &mqng::AggregateRow::mean_delta_e)
        .def_readonly("std_delta_e", &mqng::AggregateRow::std_delta_e)
        .def_readonly("mean_steps", &mqng::AggregateRow::mean_steps)
        .def_readonly("std_steps", &mqng::AggregateRow::std_steps)
        .def_readonly("mean_quality", &mqng::AggregateRow::mean_quality)
        .def_readonly("std_quality", &mqng::AggregateRow::std_quality);

    py::class_<mqng::BenchmarkReport>(m, "BenchmarkReport")
        .def_readonly("aggregates", &mqng::BenchmarkReport::aggregates)
        .def_readonly("trials", &mqng::BenchmarkReport::trials)
        .def_property_readonly("manifest_json",
                               [](const mqng::BenchmarkReport &report) {
                                   return report.manifest.dump(2);
                               });

    m.def("initial_angles", &mqng::initial_angles, py::arg("seed"),
          py::arg("d"));
    m.def(
        "check_convergence",
        [](const std::vector<double> &trace, int digits, int patience) {
            return mqng::check_convergence(trace, digits, patience);
        },
        py::arg("trace"), py::arg("digits"), py::arg("patience"));
    m.def("run_trial", &mqng::run_trial, py::arg("instance"), py::arg("cfg"),
          py::arg("max_steps"), py::arg("convergence"), py::arg("seed"),
          py::call_guard<py::gil_scoped_release>());
    m.def("run_sweep", &mqng::run_sweep, py::arg("instance"), py::arg("sweep"),
          py::call_guard<py::gil_scoped_release>());
    m.def(
        "ccdf",
        [](const std::vector<double> &values) { return mqng::ccdf(values); },
        py::arg("values"));
    m.def("default_eta_grid", &mqng::default_eta_grid);
    m.def("write_results", &mqng::write_results, py::arg("report"),
          py::arg("out_dir"));
}
