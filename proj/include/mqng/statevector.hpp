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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace mqng {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 14;

/// Dense amplitude vector of a pure n-qubit state. Qubit 0 is the least
/// significant bit of the basis index.
class Statevector {
  public:
    explicit Statevector(int n_qubits);
    Statevector(int n_qubits, std::vector<Complex> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }

    Complex &operator[](std::size_t i) { return amps_[i]; }
    const Complex &operator[](std::size_t i) const { return amps_[i]; }

    std::vector<Complex> &amplitudes() { return amps_; }
    const std::vector<Complex> &amplitudes() const { return amps_; }

    double norm() const;

  private:
    int n_qubits_ = 0;
    std::vector<Complex> amps_;
};

enum class GateKind { RX, RY, RZ, RZZ, H, CNOT, PauliRotation };

/// Rotation angle of a gate: either a fixed value or coefficient * params[param].
struct AngleSource {
    int param = -1; // -1 means fixed angle
    double coefficient = 1.0;
    double fixed_angle = 0.0;

    bool is_parameterized() const { return param >= 0; }
    double resolve(std::span<const double> params) const {
        return is_parameterized() ? coefficient * params[param] : fixed_angle;
    }
};

/// One gate of a circuit. Rotations follow R(theta) = exp(-i theta/2 G) with
/// G the generator (X, Y, Z or a Z-product over `targets`). For CNOT,
/// targets[0] is the control and targets[1] the target.
struct Gate {
    GateKind kind;
    std::vector<int> targets;
    AngleSource angle;

    static Gate rx(int qubit, int param, double coefficient = 1.0);
    static Gate ry(int qubit, int param, double coefficient = 1.0);
    static Gate rz(int qubit, int param, double coefficient = 1.0);
    static Gate rzz(int q0, int q1, int param, double coefficient = 1.0);
    static Gate pauli_rotation(std::vector<int> support, int param,
                               double coefficient = 1.0);
    static Gate h(int qubit);
    static Gate cnot(int control, int target);
};

/// Weighted sum of Z-products, diagonal in the computational basis.
struct PauliTerm {
    double coefficient = 0.0;
    std::uint32_t support_mask = 0; // bit q set <=> Z acts on qubit q

    std::vector<int> support() const;
};

struct PauliHamiltonian {
    std::vector<PauliTerm> terms;
    double constant_offset = 0.0;

    void add_term(double coefficient, std::span<const int> support);
    void add_z(int qubit, double coefficient);
    void add_zz(int q0, int q1, double coefficient);
};

/// |0...0> on n qubits; 1 <= n_qubits <= 14.
Statevector new_zero_state(int n_qubits);

/// Returns the unitary image of `state`; `params` resolves parameterized angles.
Statevector apply_gate(const Statevector &state, const Gate &gate,
                       std::span<const double> params = {});

void apply_gate_in_place(Statevector &state, const Gate &gate,
                         std::span<const double> params = {});

/// Multiplies the state by (-i/2) * generator of `gate`, the derivative of
/// R(theta) with respect to theta commuted past the gate itself. Only valid
/// for rotation kinds.
void apply_gate_generator_in_place(Statevector &state, const Gate &gate);

/// <a, b> = sum_i conj(a_i) b_i, conjugate-linear in the first argument.
Complex inner_product(const Statevector &a, const Statevector &b);

/// <psi, H psi> via per-term sign masks; exactly real by construction.
double expectation(const Statevector &state, const PauliHamiltonian &h);

/// Diagonal of H over all 2^n basis indices (includes the constant offset).
std::vector<double> hamiltonian_diagonal(const PauliHamiltonian &h,
                                         int n_qubits);

/// H|psi> for a diagonal H.
Statevector apply_hamiltonian(const PauliHamiltonian &h,
                              const Statevector &state);

} // namespace mqng
