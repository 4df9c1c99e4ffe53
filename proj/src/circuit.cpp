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

#include <stdexcept>
#include <string>

namespace mqng {

namespace {

void check_param_count(const Circuit &circuit, std::span<const double> params) {
    if (params.size() != static_cast<std::size_t>(circuit.n_params)) {
        throw std::invalid_argument(
            "parameter vector has length " + std::to_string(params.size()) +
            ", circuit expects " + std::to_string(circuit.n_params));
    }
}

} // namespace

std::vector<std::vector<std::pair<int, double>>> Circuit::param_usage() const {
    std::vector<std::vector<std::pair<int, double>>> usage(n_params);
    for (std::size_t pos = 0; pos < gates.size(); ++pos) {
        const AngleSource &angle = gates[pos].angle;
        if (angle.is_parameterized()) {
            if (angle.param >= n_params) {
                throw std::out_of_range("gate at position " +
                                        std::to_string(pos) +
                                        " references parameter " +
                                        std::to_string(angle.param));
            }
            usage[angle.param].emplace_back(static_cast<int>(pos),
                                            angle.coefficient);
        }
    }
    return usage;
}

void Circuit::validate() const {
    for (int p = 0; const auto &occurrences : param_usage()) {
        if (occurrences.empty()) {
            throw std::invalid_argument("parameter " + std::to_string(p) +
                                        " is not used by any gate");
        }
        ++p;
    }
}

Circuit build_vqe_ansatz(int n_qubits, int n_layers) {
    if (n_qubits < 2) {
        throw std::invalid_argument("VQE ansatz needs at least 2 qubits");
    }
    if (n_layers < 1) {
        throw std::invalid_argument("VQE ansatz needs at least 1 layer");
    }
    Circuit circuit;
    circuit.n_qubits = n_qubits;
    circuit.n_params = n_qubits * (n_layers + 1);
    for (int layer = 0; layer < n_layers; ++layer) {
        for (int q = 0; q < n_qubits; ++q) {
            circuit.gates.push_back(Gate::ry(q, layer * n_qubits + q));
        }
        for (int q = 0; q < n_qubits; ++q) {
            circuit.gates.push_back(Gate::cnot(q, (q + 1) % n_qubits));
        }
    }
    for (int q = 0; q < n_qubits; ++q) {
        circuit.gates.push_back(Gate::ry(q, n_layers * n_qubits + q));
    }
    // One rotation layer = one metric block.
    circuit.param_blocks.resize(circuit.n_params);
    for (int p = 0; p < circuit.n_params; ++p) {
        circuit.param_blocks[p] = p / n_qubits;
    }
    circuit.validate();
    return circuit;
}

Circuit build_qaoa_circuit(const EdgeList &graph, int n_layers,
                           const PauliHamiltonian &cost_h) {
    if (graph.n_vertices < 1) {
        throw std::invalid_argument("QAOA circuit needs at least 1 vertex");
    }
    if (n_layers < 1) {
        throw std::invalid_argument("QAOA circuit needs at least 1 layer");
    }
    for (const auto &[u, v] : graph.edges) {
        if (u < 0 || u >= graph.n_vertices || v < 0 || v >= graph.n_vertices) {
            throw std::invalid_argument("edge (" + std::to_string(u) + ", " +
                                        std::to_string(v) +
                                        ") has a vertex outside the graph");
        }
    }
    Circuit circuit;
    circuit.n_qubits = graph.n_vertices;
    circuit.n_params = 2 * n_layers;
    for (int q = 0; q < circuit.n_qubits; ++q) {
        circuit.gates.push_back(Gate::h(q));
    }
    for (int layer = 0; layer < n_layers; ++layer) {
        const int gamma = 2 * layer;
        const int beta = 2 * layer + 1;
        // exp(-i gamma H_C): R(2 gamma c) about each Z-product term. The
        // constant offset only contributes a global phase and is skipped.
        for (const PauliTerm &term : cost_h.terms) {
            const std::vector<int> support = term.support();
            if (support.empty()) {
                continue;
            }
            circuit.gates.push_back(Gate::pauli_rotation(
                support, gamma, 2.0 * term.coefficient));
        }
        // exp(-i beta sum_q X_q)
        for (int q = 0; q < circuit.n_qubits; ++q) {
            circuit.gates.push_back(Gate::rx(q, beta, 2.0));
        }
    }
    // Every shared parameter drives one commuting gate group, so each is
    // its own metric block.
    circuit.param_blocks.resize(circuit.n_params);
    for (int p = 0; p < circuit.n_params; ++p) {
        circuit.param_blocks[p] = p;
    }
    circuit.validate();
    return circuit;
}

Statevector evaluate(const Circuit &circuit, std::span<const double> params) {
    check_param_count(circuit, params);
    Statevector state = new_zero_state(circuit.n_qubits);
    for (const Gate &gate : circuit.gates) {
        apply_gate_in_place(state, gate, params);
    }
    return state;
}

StateJacobian jacobian(const Circuit &circuit, std::span<const double> params) {
    check_param_count(circuit, params);
    const std::size_t dim = std::size_t{1} << circuit.n_qubits;
    const int d = circuit.n_params;

    Statevector psi = new_zero_state(circuit.n_qubits);
    std::vector<std::vector<Complex>> columns(
        d, std::vector<Complex>(dim, Complex{0.0, 0.0}));
    // A column stays identically zero until its parameter first occurs;
    // skipping those saves roughly half the sweep on layered ansaetze.
    std::vector<char> live(d, 0);
    Statevector scratch = psi;

    for (const Gate &gate : circuit.gates) {
        for (int p = 0; p < d; ++p) {
            if (live[p]) {
                Statevector column(circuit.n_qubits, std::move(columns[p]));
                apply_gate_in_place(column, gate, params);
                columns[p] = std::move(column.amplitudes());
            }
        }
        apply_gate_in_place(psi, gate, params);
        if (gate.angle.is_parameterized() && gate.angle.coefficient != 0.0) {
            scratch.amplitudes() = psi.amplitudes();
            apply_gate_generator_in_place(scratch, gate);
            std::vector<Complex> &column = columns[gate.angle.param];
            const double coeff = gate.angle.coefficient;
            for (std::size_t i = 0; i < dim; ++i) {
                column[i] += coeff * scratch[i];
            }
            live[gate.angle.param] = 1;
        }
    }
    return StateJacobian{std::move(psi), std::move(columns)};
}

std::vector<double> energy_gradient(const StateJacobian &jac,
                                    const PauliHamiltonian &h) {
    const Statevector h_psi = apply_hamiltonian(h, jac.base_state);
    std::vector<double> grad(jac.columns.size(), 0.0);
    for (std::size_t p = 0; p < jac.columns.size(); ++p) {
        const std::vector<Complex> &column = jac.columns[p];
        double re = 0.0;
        for (std::size_t i = 0; i < column.size(); ++i) {
            re += std::real(std::conj(column[i]) * h_psi[i]);
        }
        grad[p] = 2.0 * re;
    }
    return grad;
}

std::vector<double> energy_gradient(const Circuit &circuit,
                                    std::span<const double> params,
                                    const PauliHamiltonian &h) {
    return energy_gradient(jacobian(circuit, params), h);
}

} // namespace mqng
