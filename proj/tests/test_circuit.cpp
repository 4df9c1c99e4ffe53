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
#include "mqng/circuit.hpp"
#include "test_oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace mqng;
namespace oracle = mqng::testing;

namespace {

int count_kind(const Circuit &circuit, GateKind kind) {
    int count = 0;
    for (const Gate &gate : circuit.gates) {
        count += gate.kind == kind ? 1 : 0;
    }
    return count;
}

// sup-norm relative error with an absolute floor of 1 for near-zero scales
double jacobian_mismatch(const std::vector<std::vector<Complex>> &a,
                         const std::vector<std::vector<Complex>> &b) {
    double worst = 0.0;
    double scale = 1.0;
    for (std::size_t p = 0; p < a.size(); ++p) {
        worst = std::max(worst, oracle::max_abs_diff(a[p], b[p]));
        scale = std::max(scale, oracle::max_abs(b[p]));
    }
    return worst / scale;
}

} // namespace

TEST_SUITE("circuits") {

TEST_CASE("vqe ansatz structure") {
    const Circuit small = build_vqe_ansatz(2, 1);
    CHECK(small.n_params == 4);
    CHECK(count_kind(small, GateKind::RY) == 4);
    CHECK(count_kind(small, GateKind::CNOT) == 2);

    CHECK(build_vqe_ansatz(6, 3).n_params == 24);
    CHECK_THROWS_AS(build_vqe_ansatz(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_vqe_ansatz(4, 0), std::invalid_argument);
}

TEST_CASE("vqe ansatz at zero parameters is the zero state") {
    const Circuit circuit = build_vqe_ansatz(3, 2);
    const std::vector<double> zeros(circuit.n_params, 0.0);
    const Statevector state = evaluate(circuit, zeros);
    CHECK(std::abs(state[0] - 1.0) < 1e-12);
    for (std::size_t i = 1; i < state.dim(); ++i) {
        CHECK(std::abs(state[i]) < 1e-12);
    }
}

TEST_CASE("qaoa circuit structure") {
    PauliHamiltonian cost;
    cost.add_zz(0, 1, 1.0);
    const EdgeList single_edge{2, {{0, 1}}};
    CHECK(build_qaoa_circuit(single_edge, 1, cost).n_params == 2);

    const EdgeList four = default_graph_4();
    const PauliHamiltonian mvc_cost = mvc_hamiltonian(four, 2.0);
    CHECK(build_qaoa_circuit(four, 4, mvc_cost).n_params == 8);

    const EdgeList bad{2, {{0, 5}}};
    CHECK_THROWS_AS(build_qaoa_circuit(bad, 1, cost), std::invalid_argument);
}

TEST_CASE("qaoa at zero parameters is the uniform superposition") {
    const EdgeList graph = default_graph_4();
    const Circuit circuit =
        build_qaoa_circuit(graph, 2, mvc_hamiltonian(graph, 2.0));
    const std::vector<double> zeros(circuit.n_params, 0.0);
    const Statevector state = evaluate(circuit, zeros);
    const double amp = 1.0 / std::sqrt(static_cast<double>(state.dim()));
    for (std::size_t i = 0; i < state.dim(); ++i) {
        CHECK(std::abs(state[i] - amp) < 1e-12);
    }
}

TEST_CASE("evaluate single ry") {
    Circuit circuit;
    circuit.n_qubits = 1;
    circuit.n_params = 1;
    circuit.gates = {Gate::ry(0, 0)};
    const std::vector<double> params{std::numbers::pi / 2.0};
    const Statevector state = evaluate(circuit, params);
    CHECK(std::abs(state[0] - std::cos(std::numbers::pi / 4.0)) < 1e-15);
    CHECK(std::abs(state[1] - std::sin(std::numbers::pi / 4.0)) < 1e-15);

    CHECK_THROWS_AS(evaluate(circuit, std::vector<double>{}),
                    std::invalid_argument);
}

TEST_CASE("evaluate keeps the norm") {
    auto rng = seeded_engine(21, SeedStream::kInstance);
    for (int trial = 0; trial < 20; ++trial) {
        const auto config = trial % 2 == 0 ? oracle::random_vqe_config(rng)
                                           : oracle::random_qaoa_config(rng);
        const Statevector state = evaluate(config.circuit, config.params);
        CHECK(std::abs(state.norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("jacobian of a single ry is the analytic derivative") {
    Circuit circuit;
    circuit.n_qubits = 1;
    circuit.n_params = 1;
    circuit.gates = {Gate::ry(0, 0)};
    for (const double theta : {0.2, 1.4, 3.0}) {
        const std::vector<double> params{theta};
        const StateJacobian jac = jacobian(circuit, params);
        CHECK(std::abs(jac.columns[0][0] - (-0.5 * std::sin(theta / 2.0))) <
              1e-15);
        CHECK(std::abs(jac.columns[0][1] - (0.5 * std::cos(theta / 2.0))) <
              1e-15);
    }
}

TEST_CASE("zero-coefficient parameter gives a zero column") {
    Circuit circuit;
    circuit.n_qubits = 1;
    circuit.n_params = 2;
    circuit.gates = {Gate::ry(0, 0), Gate::ry(0, 1, 0.0)};
    const std::vector<double> params{0.9, 0.3};
    const StateJacobian jac = jacobian(circuit, params);
    CHECK(oracle::max_abs(jac.columns[1]) == 0.0);
    const std::vector<double> grad =
        [&] {
            PauliHamiltonian z;
            z.add_z(0, 1.0);
            return energy_gradient(circuit, params, z);
        }();
    CHECK(grad[1] == 0.0);
}

TEST_CASE("jacobian matches central finite differences") {
    auto rng = seeded_engine(22, SeedStream::kInstance);
    for (int trial = 0; trial < 50; ++trial) {
        const auto config = trial % 2 == 0 ? oracle::random_vqe_config(rng)
                                           : oracle::random_qaoa_config(rng);
        const StateJacobian jac = jacobian(config.circuit, config.params);
        const auto fd = oracle::fd_jacobian(config.circuit, config.params);
        CHECK(jacobian_mismatch(jac.columns, fd) < 1e-6);
    }
}

TEST_CASE("jacobian matches the per-occurrence oracle") {
    auto rng = seeded_engine(23, SeedStream::kInstance);
    for (int trial = 0; trial < 10; ++trial) {
        const auto config = trial % 2 == 0 ? oracle::random_vqe_config(rng)
                                           : oracle::random_qaoa_config(rng);
        const StateJacobian jac = jacobian(config.circuit, config.params);
        const auto reference =
            oracle::per_occurrence_jacobian(config.circuit, config.params);
        CHECK(jacobian_mismatch(jac.columns, reference) < 1e-13);
    }
}

TEST_CASE("shared parameters equal the expanded-circuit column sums") {
    auto rng = seeded_engine(24, SeedStream::kInstance);
    for (int trial = 0; trial < 10; ++trial) {
        const auto config = oracle::random_qaoa_config(rng);
        const StateJacobian jac = jacobian(config.circuit, config.params);

        const auto expanded =
            oracle::expand_shared_parameters(config.circuit, config.params);
        const StateJacobian expanded_jac =
            jacobian(expanded.circuit, expanded.expanded_params);
        std::vector<std::vector<Complex>> summed(
            config.circuit.n_params,
            std::vector<Complex>(jac.base_state.dim(), Complex{0.0, 0.0}));
        for (std::size_t j = 0; j < expanded.original_param.size(); ++j) {
            const int original = expanded.original_param[j];
            for (std::size_t i = 0; i < expanded_jac.columns[j].size(); ++i) {
                summed[original][i] += expanded_jac.columns[j][i];
            }
        }
        for (int p = 0; p < config.circuit.n_params; ++p) {
            CHECK(oracle::max_abs_diff(jac.columns[p], summed[p]) < 1e-12);
        }
    }
}

TEST_CASE("jacobian columns are orthogonal to the state in the real sense") {
    auto rng = seeded_engine(25, SeedStream::kInstance);
    for (int trial = 0; trial < 20; ++trial) {
        const auto config = trial % 2 == 0 ? oracle::random_vqe_config(rng)
                                           : oracle::random_qaoa_config(rng);
        const StateJacobian jac = jacobian(config.circuit, config.params);
        for (const auto &column : jac.columns) {
            Complex overlap{0.0, 0.0};
            for (std::size_t i = 0; i < column.size(); ++i) {
                overlap += std::conj(column[i]) * jac.base_state[i];
            }
            CHECK(std::abs(overlap.real()) < 1e-10);
        }
    }
}

TEST_CASE("energy gradient of ry under Z is -sin(theta)") {
    Circuit circuit;
    circuit.n_qubits = 1;
    circuit.n_params = 1;
    circuit.gates = {Gate::ry(0, 0)};
    PauliHamiltonian z;
    z.add_z(0, 1.0);
    const std::vector<double> params{std::numbers::pi / 2.0};
    const std::vector<double> grad = energy_gradient(circuit, params, z);
    CHECK(std::abs(grad[0] - (-1.0)) < 1e-12);
}

TEST_CASE("energy gradient matches finite differences") {
    auto rng = seeded_engine(26, SeedStream::kInstance);
    PauliHamiltonian field;
    for (int trial = 0; trial < 50; ++trial) {
        const auto config = trial % 2 == 0 ? oracle::random_vqe_config(rng)
                                           : oracle::random_qaoa_config(rng);
        field.terms.clear();
        for (int q = 0; q < config.circuit.n_qubits; ++q) {
            field.add_z(q, uniform_symmetric(rng));
        }
        field.add_zz(0, 1, uniform_symmetric(rng));
        const std::vector<double> grad =
            energy_gradient(config.circuit, config.params, field);
        const std::vector<double> fd =
            oracle::fd_energy_gradient(config.circuit, config.params, field);
        double scale = 1.0;
        for (const double g : fd) {
            scale = std::max(scale, std::abs(g));
        }
        for (std::size_t p = 0; p < grad.size(); ++p) {
            CHECK(std::abs(grad[p] - fd[p]) / scale < 1e-6);
        }
    }
}

TEST_CASE("zero-params gradient on the vqe ansatz matches finite differences") {
    const Circuit circuit = build_vqe_ansatz(3, 2);
    PauliHamiltonian h;
    for (int q = 0; q < 3; ++q) {
        h.add_z(q, 1.0);
    }
    const std::vector<double> zeros(circuit.n_params, 0.0);
    const std::vector<double> grad = energy_gradient(circuit, zeros, h);
    const std::vector<double> fd =
        oracle::fd_energy_gradient(circuit, zeros, h);
    for (std::size_t p = 0; p < grad.size(); ++p) {
        CHECK(std::abs(grad[p] - fd[p]) < 1e-6);
    }
}

TEST_CASE("circuit validation catches unused parameters") {
    Circuit circuit;
    circuit.n_qubits = 1;
    circuit.n_params = 2;
    circuit.gates = {Gate::ry(0, 0)};
    CHECK_THROWS_AS(circuit.validate(), std::invalid_argument);
}

} // TEST_SUITE
