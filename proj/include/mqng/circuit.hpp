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

#include "mqng/graph.hpp"
#include "mqng/statevector.hpp"

#include <span>
#include <utility>
#include <vector>

namespace mqng {

/// Ordered gate sequence over a fixed parameter vector of length n_params.
/// Several gates may share one parameter (QAOA layers); the per-gate
/// coefficient lives in Gate::angle.
struct Circuit {
    int n_qubits = 0;
    int n_params = 0;
    std::vector<Gate> gates;
    /// Layer id per parameter, used by the block-diagonal metric
    /// approximation. Empty means no layer structure is known and each
    /// parameter forms its own block.
    std::vector<int> param_blocks;

    /// parameter index -> list of (gate position, angle coefficient)
    std::vector<std::vector<std::pair<int, double>>> param_usage() const;

    /// Every parameter index must be used by at least one gate.
    void validate() const;
};

/// Hardware-efficient ansatz: per layer one RY per qubit (own parameter each)
/// followed by a CNOT ring i -> (i+1) mod n, then a final RY layer.
/// n_params = n_qubits * (n_layers + 1).
Circuit build_vqe_ansatz(int n_qubits, int n_layers);

/// H on every qubit, then per layer l the cost rotations exp(-i gamma_l H_C)
/// (RZ/RZZ sharing parameter gamma_l, gate angle 2 * gamma_l * coefficient)
/// followed by the mixer RX(2 beta_l) on every qubit. Parameters interleave
/// as (gamma_1, beta_1, gamma_2, beta_2, ...); n_params = 2 * n_layers.
Circuit build_qaoa_circuit(const EdgeList &graph, int n_layers,
                           const PauliHamiltonian &cost_h);

/// Applies all gates in order to |0...0>.
Statevector evaluate(const Circuit &circuit, std::span<const double> params);

/// Base state psi and all d columns d(psi)/d(theta_i).
struct StateJacobian {
    Statevector base_state;
    std::vector<std::vector<Complex>> columns;
};

/// Exact state jacobian via a forward gate-derivative sweep; shared
/// parameters accumulate by the product rule.
StateJacobian jacobian(const Circuit &circuit, std::span<const double> params);

/// Gradient of the raw expectation <psi, H psi>:
/// component i = 2 Re <d(psi)/d(theta_i), H psi>.
std::vector<double> energy_gradient(const StateJacobian &jac,
                                    const PauliHamiltonian &h);

std::vector<double> energy_gradient(const Circuit &circuit,
                                    std::span<const double> params,
                                    const PauliHamiltonian &h);

} // namespace mqng
