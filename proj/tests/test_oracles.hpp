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
//
// Test-only oracles. Each reimplements a quantity along an independent route
// (Kronecker products, finite differences, one-pass-per-occurrence
// derivatives, direct classical cost evaluation) so the library paths they
// check cannot share bugs with them.
#pragma once

#include "mqng/circuit.hpp"
#include "mqng/graph.hpp"
#include "mqng/problem.hpp"
#include "mqng/rng.hpp"
#include "mqng/statevector.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <span>
#include <tuple>
#include <vector>

namespace mqng::testing {

// Diagonal of a Z-product Hamiltonian built from Kronecker products of
// per-qubit (+1, -1) sign vectors; kron accumulation runs from qubit 0
// (least significant) upward.
inline std::vector<double> kron_diagonal(const PauliHamiltonian &h,
                                         int n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    std::vector<double> total(dim, h.constant_offset);
    for (const PauliTerm &term : h.terms) {
        std::vector<double> acc{1.0};
        for (int q = 0; q < n_qubits; ++q) {
            const bool in_support = (term.support_mask >> q) & 1u;
            const double v[2] = {1.0, in_support ? -1.0 : 1.0};
            std::vector<double> next(acc.size() * 2);
            for (int bit = 0; bit < 2; ++bit) {
                for (std::size_t i = 0; i < acc.size(); ++i) {
                    next[(static_cast<std::size_t>(bit) << q) | i] =
                        v[bit] * acc[i];
                }
            }
            acc = std::move(next);
        }
        for (std::size_t i = 0; i < dim; ++i) {
            total[i] += term.coefficient * acc[i];
        }
    }
    return total;
}

// <psi|H|psi> as a dense quadratic form over the kron-built diagonal.
inline double dense_expectation(const Statevector &state,
                                const PauliHamiltonian &h) {
    const std::vector<double> diag = kron_diagonal(h, state.n_qubits());
    double value = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        value += diag[i] * std::norm(state[i]);
    }
    return value;
}

// Central finite differences of evaluate(), one column per parameter.
inline std::vector<std::vector<Complex>>
fd_jacobian(const Circuit &circuit, std::vector<double> params,
            double h = 1e-5) {
    std::vector<std::vector<Complex>> columns;
    for (int p = 0; p < circuit.n_params; ++p) {
        const double saved = params[p];
        params[p] = saved + h;
        const Statevector plus = evaluate(circuit, params);
        params[p] = saved - h;
        const Statevector minus = evaluate(circuit, params);
        params[p] = saved;
        std::vector<Complex> column(plus.dim());
        for (std::size_t i = 0; i < plus.dim(); ++i) {
            column[i] = (plus[i] - minus[i]) / (2.0 * h);
        }
        columns.push_back(std::move(column));
    }
    return columns;
}

inline std::vector<double> fd_energy_gradient(const Circuit &circuit,
                                              std::vector<double> params,
                                              const PauliHamiltonian &ham,
                                              double h = 1e-5) {
    std::vector<double> grad(circuit.n_params);
    for (int p = 0; p < circuit.n_params; ++p) {
        const double saved = params[p];
        params[p] = saved + h;
        const double plus = expectation(evaluate(circuit, params), ham);
        params[p] = saved - h;
        const double minus = expectation(evaluate(circuit, params), ham);
        params[p] = saved;
        grad[p] = (plus - minus) / (2.0 * h);
    }
    return grad;
}

// The definitional jacobian: for every parameterized gate occurrence, one
// full forward pass with that gate followed by its generator factor, scaled
// by the occurrence coefficient and accumulated into the parameter's column.
inline std::vector<std::vector<Complex>>
per_occurrence_jacobian(const Circuit &circuit,
                        std::span<const double> params) {
    const std::size_t dim = std::size_t{1} << circuit.n_qubits;
    std::vector<std::vector<Complex>> columns(
        circuit.n_params, std::vector<Complex>(dim, Complex{0.0, 0.0}));
    for (std::size_t occurrence = 0; occurrence < circuit.gates.size();
         ++occurrence) {
        const Gate &gate = circuit.gates[occurrence];
        if (!gate.angle.is_parameterized()) {
            continue;
        }
        Statevector state = new_zero_state(circuit.n_qubits);
        for (std::size_t pos = 0; pos < circuit.gates.size(); ++pos) {
            apply_gate_in_place(state, circuit.gates[pos], params);
            if (pos == occurrence) {
                apply_gate_generator_in_place(state, circuit.gates[pos]);
            }
        }
        std::vector<Complex> &column = columns[gate.angle.param];
        for (std::size_t i = 0; i < dim; ++i) {
            column[i] += gate.angle.coefficient * state[i];
        }
    }
    return columns;
}

// Clone of a circuit where every parameterized occurrence receives its own
// parameter index; expanded_of[j] is the original parameter of new index j.
struct ExpandedCircuit {
    Circuit circuit;
    std::vector<int> original_param;
    std::vector<double> expanded_params;
};

inline ExpandedCircuit expand_shared_parameters(const Circuit &circuit,
                                                std::span<const double> params) {
    ExpandedCircuit expanded;
    expanded.circuit.n_qubits = circuit.n_qubits;
    for (const Gate &gate : circuit.gates) {
        Gate clone = gate;
        if (gate.angle.is_parameterized()) {
            clone.angle.param = static_cast<int>(expanded.original_param.size());
            expanded.original_param.push_back(gate.angle.param);
            expanded.expanded_params.push_back(params[gate.angle.param]);
        }
        expanded.circuit.gates.push_back(std::move(clone));
    }
    expanded.circuit.n_params =
        static_cast<int>(expanded.original_param.size());
    return expanded;
}

inline Statevector random_state(int n_qubits, std::mt19937_64 &rng) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    std::vector<Complex> amps(dim);
    for (Complex &amp : amps) {
        amp = Complex{uniform_symmetric(rng), uniform_symmetric(rng)};
    }
    double norm = 0.0;
    for (const Complex &amp : amps) {
        norm += std::norm(amp);
    }
    norm = std::sqrt(norm);
    for (Complex &amp : amps) {
        amp /= norm;
    }
    return Statevector(n_qubits, std::move(amps));
}

inline std::vector<double> random_params(int d, std::mt19937_64 &rng) {
    std::vector<double> params(d);
    for (double &p : params) {
        p = 2.0 * std::numbers::pi * uniform_unit(rng);
    }
    return params;
}

struct CircuitConfig {
    Circuit circuit;
    std::vector<double> params;
};

inline CircuitConfig random_vqe_config(std::mt19937_64 &rng) {
    const int n = 2 + static_cast<int>(rng() % 3); // 2..4 qubits
    const int layers = 1 + static_cast<int>(rng() % 3);
    CircuitConfig config;
    config.circuit = build_vqe_ansatz(n, layers);
    config.params = random_params(config.circuit.n_params, rng);
    return config;
}

inline CircuitConfig random_qaoa_config(std::mt19937_64 &rng) {
    const int n = 3 + static_cast<int>(rng() % 3); // 3..5 vertices
    EdgeList graph;
    graph.n_vertices = n;
    // Ring plus random chords keeps the graph connected.
    for (int v = 0; v < n; ++v) {
        graph.edges.emplace_back(v, (v + 1) % n);
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 2; v < n; ++v) {
            if ((u != 0 || v != n - 1) && rng() % 2 == 0) {
                graph.edges.emplace_back(u, v);
            }
        }
    }
    const int layers = 1 + static_cast<int>(rng() % 3);
    CircuitConfig config;
    const PauliHamiltonian cost = mvc_hamiltonian(graph, 2.0);
    config.circuit = build_qaoa_circuit(graph, layers, cost);
    config.params = random_params(config.circuit.n_params, rng);
    return config;
}

// Direct classical Ising energy of one bitstring, s_i = 1 - 2 b_i.
inline double
classical_ising_energy(std::size_t bits,
                       const std::vector<std::tuple<int, int, double>> &J,
                       const std::vector<double> &h) {
    auto spin = [bits](int q) {
        return 1.0 - 2.0 * static_cast<double>((bits >> q) & 1u);
    };
    double energy = 0.0;
    for (const auto &[i, j, coupling] : J) {
        energy += coupling * spin(i) * spin(j);
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
        energy += h[i] * spin(static_cast<int>(i));
    }
    return energy;
}

// Direct vertex-cover cost of one bitstring, x_i = b_i.
inline double classical_mvc_cost(std::size_t bits, const EdgeList &graph,
                                 double penalty) {
    double cost = 0.0;
    for (int v = 0; v < graph.n_vertices; ++v) {
        cost += static_cast<double>((bits >> v) & 1u);
    }
    for (const auto &[u, v] : graph.edges) {
        const double xu = static_cast<double>((bits >> u) & 1u);
        const double xv = static_cast<double>((bits >> v) & 1u);
        cost += penalty * (1.0 - xu) * (1.0 - xv);
    }
    return cost;
}

inline double max_abs_diff(std::span<const Complex> a,
                           std::span<const Complex> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

inline double max_abs(std::span<const Complex> a) {
    double worst = 0.0;
    for (const Complex &v : a) {
        worst = std::max(worst, std::abs(v));
    }
    return worst;
}

} // namespace mqng::testing
