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
#include "mqng/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mqng {

namespace {

void check_qubit_count(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("n_qubits must be in [1, " +
                                    std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(n_qubits));
    }
}

void check_targets(const Gate &gate, int n_qubits) {
    for (std::size_t i = 0; i < gate.targets.size(); ++i) {
        const int q = gate.targets[i];
        if (q < 0 || q >= n_qubits) {
            throw std::out_of_range("gate target " + std::to_string(q) +
                                    " out of range for " +
                                    std::to_string(n_qubits) + " qubits");
        }
        for (std::size_t j = i + 1; j < gate.targets.size(); ++j) {
            if (gate.targets[j] == q) {
                throw std::out_of_range("gate targets must be distinct");
            }
        }
    }
}

std::uint32_t support_mask_of(std::span<const int> qubits) {
    std::uint32_t mask = 0;
    for (int q : qubits) {
        if (q < 0 || q >= kMaxQubits) {
            throw std::out_of_range("qubit index out of range: " +
                                    std::to_string(q));
        }
        mask |= 1u << q;
    }
    return mask;
}

// y[i] *= exp(-i angle/2 * s_i) with s_i = (-1)^popcount(i & mask).
void apply_phase_rotation(std::vector<Complex> &a, std::uint32_t mask,
                          double angle) {
    const Complex plus{std::cos(angle / 2.0), -std::sin(angle / 2.0)};
    const Complex minus = std::conj(plus);
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] *= (std::popcount(static_cast<std::uint32_t>(i) & mask) & 1)
                    ? minus
                    : plus;
    }
}

void apply_single_qubit(std::vector<Complex> &a, int q, Complex m00,
                        Complex m01, Complex m10, Complex m11) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < a.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Complex a0 = a[i];
            const Complex a1 = a[i + stride];
            a[i] = m00 * a0 + m01 * a1;
            a[i + stride] = m10 * a0 + m11 * a1;
        }
    }
}

// RY is real-valued; specialized to avoid complex-complex products.
void apply_ry(std::vector<Complex> &a, int q, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < a.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Complex a0 = a[i];
            const Complex a1 = a[i + stride];
            a[i] = c * a0 - s * a1;
            a[i + stride] = s * a0 + c * a1;
        }
    }
}

void apply_h(std::vector<Complex> &a, int q) {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < a.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Complex a0 = a[i];
            const Complex a1 = a[i + stride];
            a[i] = inv_sqrt2 * (a0 + a1);
            a[i + stride] = inv_sqrt2 * (a0 - a1);
        }
    }
}

void apply_cnot(std::vector<Complex> &a, int control, int target) {
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(a[i], a[i | tbit]);
        }
    }
}

} // namespace

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
    check_qubit_count(n_qubits);
    amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amps_[0] = Complex{1.0, 0.0};
}

Statevector::Statevector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    check_qubit_count(n_qubits);
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument("amplitude vector has length " +
                                    std::to_string(amps_.size()) +
                                    ", expected 2^" + std::to_string(n_qubits));
    }
}

double Statevector::norm() const {
    double sum = 0.0;
    for (const Complex &amp : amps_) {
        sum += std::norm(amp);
    }
    return std::sqrt(sum);
}

Gate Gate::rx(int qubit, int param, double coefficient) {
    return Gate{GateKind::RX, {qubit}, {param, coefficient, 0.0}};
}

Gate Gate::ry(int qubit, int param, double coefficient) {
    return Gate{GateKind::RY, {qubit}, {param, coefficient, 0.0}};
}

Gate Gate::rz(int qubit, int param, double coefficient) {
    return Gate{GateKind::RZ, {qubit}, {param, coefficient, 0.0}};
}

Gate Gate::rzz(int q0, int q1, int param, double coefficient) {
    return Gate{GateKind::RZZ, {q0, q1}, {param, coefficient, 0.0}};
}

Gate Gate::pauli_rotation(std::vector<int> support, int param,
                          double coefficient) {
    return Gate{GateKind::PauliRotation, std::move(support),
                {param, coefficient, 0.0}};
}

Gate Gate::h(int qubit) { return Gate{GateKind::H, {qubit}, {}}; }

Gate Gate::cnot(int control, int target) {
    return Gate{GateKind::CNOT, {control, target}, {}};
}

std::vector<int> PauliTerm::support() const {
    std::vector<int> qubits;
    for (int q = 0; q < kMaxQubits; ++q) {
        if (support_mask & (1u << q)) {
            qubits.push_back(q);
        }
    }
    return qubits;
}

void PauliHamiltonian::add_term(double coefficient,
                                std::span<const int> support) {
    terms.push_back({coefficient, support_mask_of(support)});
}

void PauliHamiltonian::add_z(int qubit, double coefficient) {
    const int support[] = {qubit};
    add_term(coefficient, support);
}

void PauliHamiltonian::add_zz(int q0, int q1, double coefficient) {
    const int support[] = {q0, q1};
    add_term(coefficient, support);
}

Statevector new_zero_state(int n_qubits) { return Statevector(n_qubits); }

void apply_gate_in_place(Statevector &state, const Gate &gate,
                         std::span<const double> params) {
    check_targets(gate, state.n_qubits());
    if (gate.angle.is_parameterized() &&
        static_cast<std::size_t>(gate.angle.param) >= params.size()) {
        throw std::out_of_range("gate parameter index " +
                                std::to_string(gate.angle.param) +
                                " outside parameter vector of length " +
                                std::to_string(params.size()));
    }
    std::vector<Complex> &a = state.amplitudes();
    switch (gate.kind) {
    case GateKind::H:
        apply_h(a, gate.targets[0]);
        break;
    case GateKind::CNOT:
        apply_cnot(a, gate.targets[0], gate.targets[1]);
        break;
    case GateKind::RY:
        apply_ry(a, gate.targets[0], gate.angle.resolve(params));
        break;
    case GateKind::RX: {
        const double angle = gate.angle.resolve(params);
        const double c = std::cos(angle / 2.0);
        const double s = std::sin(angle / 2.0);
        apply_single_qubit(a, gate.targets[0], Complex{c, 0.0},
                           Complex{0.0, -s}, Complex{0.0, -s}, Complex{c, 0.0});
        break;
    }
    case GateKind::RZ:
    case GateKind::RZZ:
    case GateKind::PauliRotation:
        apply_phase_rotation(a, support_mask_of(gate.targets),
                             gate.angle.resolve(params));
        break;
    }
}

Statevector apply_gate(const Statevector &state, const Gate &gate,
                       std::span<const double> params) {
    Statevector out = state;
    apply_gate_in_place(out, gate, params);
    return out;
}

void apply_gate_generator_in_place(Statevector &state, const Gate &gate) {
    check_targets(gate, state.n_qubits());
    std::vector<Complex> &a = state.amplitudes();
    switch (gate.kind) {
    case GateKind::RY: {
        // (-i/2) Y : (a0, a1) -> (-a1/2, a0/2)
        const std::size_t stride = std::size_t{1} << gate.targets[0];
        for (std::size_t base = 0; base < a.size(); base += 2 * stride) {
            for (std::size_t i = base; i < base + stride; ++i) {
                const Complex a0 = a[i];
                a[i] = -0.5 * a[i + stride];
                a[i + stride] = 0.5 * a0;
            }
        }
        break;
    }
    case GateKind::RX: {
        // (-i/2) X : (a0, a1) -> (-i a1/2, -i a0/2)
        const std::size_t stride = std::size_t{1} << gate.targets[0];
        const Complex half_mi{0.0, -0.5};
        for (std::size_t base = 0; base < a.size(); base += 2 * stride) {
            for (std::size_t i = base; i < base + stride; ++i) {
                const Complex a0 = a[i];
                a[i] = half_mi * a[i + stride];
                a[i + stride] = half_mi * a0;
            }
        }
        break;
    }
    case GateKind::RZ:
    case GateKind::RZZ:
    case GateKind::PauliRotation: {
        // (-i/2) * Z-product: a_i *= -i/2 * s_i
        const std::uint32_t mask = support_mask_of(gate.targets);
        const Complex minus_half_i{0.0, -0.5};
        const Complex plus_half_i{0.0, 0.5};
        for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] *= (std::popcount(static_cast<std::uint32_t>(i) & mask) & 1)
                        ? plus_half_i
                        : minus_half_i;
        }
        break;
    }
    case GateKind::H:
    case GateKind::CNOT:
        throw std::invalid_argument(
            "gate kind carries no angle to differentiate");
    }
}

Complex inner_product(const Statevector &a, const Statevector &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("inner_product dimension mismatch: " +
                                    std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()));
    }
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

double expectation(const Statevector &state, const PauliHamiltonian &h) {
    const std::vector<Complex> &a = state.amplitudes();
    const std::uint32_t dim_mask = static_cast<std::uint32_t>(a.size() - 1);
    for (const PauliTerm &term : h.terms) {
        if (term.support_mask & ~dim_mask) {
            throw std::invalid_argument(
                "hamiltonian term acts outside the state's qubits");
        }
    }
    double total = h.constant_offset;
    for (const PauliTerm &term : h.terms) {
        double signed_sum = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double p = std::norm(a[i]);
            signed_sum +=
                (std::popcount(static_cast<std::uint32_t>(i) & term.support_mask) & 1)
                    ? -p
                    : p;
        }
        total += term.coefficient * signed_sum;
    }
    return total;
}

std::vector<double> hamiltonian_diagonal(const PauliHamiltonian &h,
                                         int n_qubits) {
    check_qubit_count(n_qubits);
    const std::size_t dim = std::size_t{1} << n_qubits;
    for (const PauliTerm &term : h.terms) {
        if (term.support_mask >> n_qubits) {
            throw std::invalid_argument(
                "hamiltonian term acts outside the requested qubit count");
        }
    }
    std::vector<double> diag(dim, h.constant_offset);
    for (const PauliTerm &term : h.terms) {
        for (std::size_t i = 0; i < dim; ++i) {
            diag[i] +=
                (std::popcount(static_cast<std::uint32_t>(i) & term.support_mask) & 1)
                    ? -term.coefficient
                    : term.coefficient;
        }
    }
    return diag;
}

Statevector apply_hamiltonian(const PauliHamiltonian &h,
                              const Statevector &state) {
    const std::vector<double> diag = hamiltonian_diagonal(h, state.n_qubits());
    Statevector out = state;
    for (std::size_t i = 0; i < out.dim(); ++i) {
        out[i] *= diag[i];
    }
    return out;
}

} // namespace mqng
