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

#include "mqng/circuit.hpp"
#include "mqng/graph.hpp"
#include "mqng/statevector.hpp"

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace mqng {

enum class ProblemKind { PortfolioVqe, MvcQaoa };

std::string to_string(ProblemKind kind);

/// A benchmark instance: diagonal Hamiltonian, matching ansatz circuit, and
/// the exact ground data used for delta-E and quality-ratio scoring.
struct ProblemInstance {
    ProblemKind kind = ProblemKind::PortfolioVqe;
    PauliHamiltonian hamiltonian;
    Circuit circuit;
    double ground_energy = 0.0;
    std::vector<std::size_t> solution_states;

    // Generation metadata, echoed into the run manifest.
    std::uint64_t seed = 0;
    int n_layers = 0;
    EdgeList graph;       // MVC only
    double penalty = 0.0; // MVC only
};

/// Ising spin glass H = sum_{i<j} J_ij Z_i Z_j + sum_i h_i Z_i with J, h
/// drawn independently from a seeded uniform [-1, 1); VQE ansatz circuit.
ProblemInstance build_portfolio(int n_qubits, std::uint64_t seed,
                                int n_layers);

/// Same Hamiltonian from explicit couplings. `couplings` lists
/// (i, j, J_ij) pairs with i < j; `fields` is h (length n_qubits).
ProblemInstance build_portfolio_from_couplings(
    int n_qubits, const std::vector<std::tuple<int, int, double>> &couplings,
    const std::vector<double> &fields, int n_layers);

/// Minimum vertex cover cost C(x) = sum_i x_i
/// + penalty * sum_{(u,v) in E} (1 - x_u)(1 - x_v), mapped to the Z basis
/// via x_i = (1 - z_i)/2; QAOA circuit over the graph. Requires a connected
/// graph and penalty > 1 so every ground state is a valid cover.
ProblemInstance build_mvc(const EdgeList &graph, int n_layers, double penalty);

/// The Z-basis Hamiltonian of the MVC cost, without the circuit.
PauliHamiltonian mvc_hamiltonian(const EdgeList &graph, double penalty);

/// Exhaustive minimum of the diagonal; returns the ground energy and all
/// basis indices within 1e-9 of it.
std::pair<double, std::vector<std::size_t>>
exact_solve(const PauliHamiltonian &h, int n_qubits);

/// Total probability mass of `state` on the solution basis states.
double quality_ratio(const Statevector &state,
                     const std::vector<std::size_t> &solution_states);

} // namespace mqng
