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
#include "mqng/problem.hpp"

#include "mqng/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>

namespace mqng {

namespace {

constexpr double kDegeneracyTolerance = 1e-9;

void attach_ground_data(ProblemInstance &instance) {
    std::tie(instance.ground_energy, instance.solution_states) =
        exact_solve(instance.hamiltonian, instance.circuit.n_qubits);
}

} // namespace

std::string to_string(ProblemKind kind) {
    switch (kind) {
    case ProblemKind::PortfolioVqe:
        return "portfolio";
    case ProblemKind::MvcQaoa:
        return "mvc";
    }
    throw std::invalid_argument("unknown problem kind");
}

ProblemInstance build_portfolio(int n_qubits, std::uint64_t seed,
                                int n_layers) {
    if (n_qubits < 2 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("portfolio size must be in [2, " +
                                    std::to_string(kMaxQubits) + "]");
    }
    auto rng = seeded_engine(seed, SeedStream::kInstance);
    std::vector<std::tuple<int, int, double>> couplings;
    for (int i = 0; i < n_qubits; ++i) {
        for (int j = i + 1; j < n_qubits; ++j) {
            couplings.emplace_back(i, j, uniform_symmetric(rng));
        }
    }
    std::vector<double> fields(n_qubits);
    for (double &field : fields) {
        field = uniform_symmetric(rng);
    }
    ProblemInstance instance =
        build_portfolio_from_couplings(n_qubits, couplings, fields, n_layers);
    instance.seed = seed;
    return instance;
}

ProblemInstance build_portfolio_from_couplings(
    int n_qubits, const std::vector<std::tuple<int, int, double>> &couplings,
    const std::vector<double> &fields, int n_layers) {
    if (fields.size() != static_cast<std::size_t>(n_qubits)) {
        throw std::invalid_argument("field vector length must equal n_qubits");
    }
    ProblemInstance instance;
    instance.kind = ProblemKind::PortfolioVqe;
    instance.n_layers = n_layers;
    for (const auto &[i, j, coupling] : couplings) {
        if (i >= j) {
            throw std::invalid_argument("couplings must have i < j");
        }
        instance.hamiltonian.add_zz(i, j, coupling);
    }
    for (int i = 0; i < n_qubits; ++i) {
        if (fields[i] != 0.0) {
            instance.hamiltonian.add_z(i, fields[i]);
        }
    }
    instance.circuit = build_vqe_ansatz(n_qubits, n_layers);
    attach_ground_data(instance);
    return instance;
}

PauliHamiltonian mvc_hamiltonian(const EdgeList &graph, double penalty) {
    // C(x) = sum_i x_i + P sum_E (1-x_u)(1-x_v) with x_i = (1 - z_i)/2:
    //   sum_i x_i             -> n/2 - 1/2 sum_i z_i
    //   (1-x_u)(1-x_v)        -> 1/4 (1 + z_u + z_v + z_u z_v)
    PauliHamiltonian h;
    const int n = graph.n_vertices;
    std::vector<int> degree(n, 0);
    for (const auto &[u, v] : graph.edges) {
        degree[u] += 1;
        degree[v] += 1;
        h.add_zz(u, v, penalty / 4.0);
    }
    for (int i = 0; i < n; ++i) {
        const double coefficient = penalty * degree[i] / 4.0 - 0.5;
        if (coefficient != 0.0) {
            h.add_z(i, coefficient);
        }
    }
    h.constant_offset =
        n / 2.0 + penalty * static_cast<double>(graph.edges.size()) / 4.0;
    return h;
}

ProblemInstance build_mvc(const EdgeList &graph, int n_layers,
                          double penalty) {
    if (!(penalty > 1.0)) {
        throw std::invalid_argument(
            "penalty must be > 1 so ground states are valid covers");
    }
    if (!is_connected(graph)) {
        throw std::invalid_argument("MVC instance requires a connected graph");
    }
    if (graph.n_vertices > kMaxQubits) {
        throw std::invalid_argument("graph too large: at most " +
                                    std::to_string(kMaxQubits) + " vertices");
    }
    ProblemInstance instance;
    instance.kind = ProblemKind::MvcQaoa;
    instance.n_layers = n_layers;
    instance.graph = graph;
    instance.penalty = penalty;
    instance.hamiltonian = mvc_hamiltonian(graph, penalty);
    instance.circuit = build_qaoa_circuit(graph, n_layers, instance.hamiltonian);
    attach_ground_data(instance);
    return instance;
}

std::pair<double, std::vector<std::size_t>>
exact_solve(const PauliHamiltonian &h, int n_qubits) {
    const std::vector<double> diag = hamiltonian_diagonal(h, n_qubits);
    const double ground = *std::min_element(diag.begin(), diag.end());
    std::vector<std::size_t> states;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (diag[i] <= ground + kDegeneracyTolerance) {
            states.push_back(i);
        }
    }
    return {ground, states};
}

double quality_ratio(const Statevector &state,
                     const std::vector<std::size_t> &solution_states) {
    double mass = 0.0;
    for (std::size_t index : solution_states) {
        if (index >= state.dim()) {
            throw std::invalid_argument("solution state index out of range");
        }
        mass += std::norm(state[index]);
    }
    return mass;
}

} // namespace mqng
