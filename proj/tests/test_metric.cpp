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
#include "mqng/metric.hpp"
#include "mqng/errors.hpp"
#include "test_oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

using namespace mqng;
namespace oracle = mqng::testing;

namespace {

Circuit single_ry() {
    Circuit circuit;
    circuit.n_qubits = 1;
    circuit.n_params = 1;
    circuit.gates = {Gate::ry(0, 0)};
    return circuit;
}

} // namespace

TEST_SUITE("metric") {

TEST_CASE("single ry metric is 1/4 for every angle") {
    const Circuit circuit = single_ry();
    for (int k = 0; k < 20; ++k) {
        const std::vector<double> params{0.1 + 0.3 * k};
        const MetricTensor metric =
            quantum_geometric_tensor(jacobian(circuit, params));
        CHECK(std::abs(metric.fubini_study(0, 0) - 0.25) < 1e-12);
        CHECK(std::abs(metric.qgt(0, 0).imag()) < 1e-12);
    }
}

TEST_CASE("product of two ry rotations gives diag(1/4, 1/4)") {
    Circuit circuit;
    circuit.n_qubits = 2;
    circuit.n_params = 2;
    circuit.gates = {Gate::ry(0, 0), Gate::ry(1, 1)};
    const std::vector<double> params{0.7, 1.9};
    const MetricTensor metric =
        quantum_geometric_tensor(jacobian(circuit, params));
    CHECK(std::abs(metric.fubini_study(0, 0) - 0.25) < 1e-12);
    CHECK(std::abs(metric.fubini_study(1, 1) - 0.25) < 1e-12);
    CHECK(std::abs(metric.fubini_study(0, 1)) < 1e-12);
    CHECK(std::abs(metric.fubini_study(1, 0)) < 1e-12);
}

TEST_CASE("one-parameter metric equals the projector line element") {
    // g = |d psi|^2 - |<d psi, psi>|^2 for d = 1
    Circuit circuit;
    circuit.n_qubits = 1;
    circuit.n_params = 1;
    circuit.gates = {Gate::h(0), Gate::rz(0, 0), Gate::ry(0, 0, 0.5)};
    for (const double theta : {0.2, 0.9, 2.4}) {
        const std::vector<double> params{theta};
        const StateJacobian jac = jacobian(circuit, params);
        double column_norm_sq = 0.0;
        Complex overlap{0.0, 0.0};
        for (std::size_t i = 0; i < jac.columns[0].size(); ++i) {
            column_norm_sq += std::norm(jac.columns[0][i]);
            overlap += std::conj(jac.columns[0][i]) * jac.base_state[i];
        }
        const double expected = column_norm_sq - std::norm(overlap);
        const MetricTensor metric = quantum_geometric_tensor(jac);
        CHECK(std::abs(metric.fubini_study(0, 0) - expected) < 1e-12);
    }
}

TEST_CASE("gauge invariance under global phases") {
    auto rng = seeded_engine(31, SeedStream::kInstance);
    const auto config = oracle::random_vqe_config(rng);
    const StateJacobian jac = jacobian(config.circuit, config.params);
    const MetricTensor reference = quantum_geometric_tensor(jac);
    for (int k = 0; k < 50; ++k) {
        const double alpha = 2.0 * std::numbers::pi * uniform_unit(rng);
        const Complex phase{std::cos(alpha), std::sin(alpha)};
        StateJacobian shifted = jac;
        for (std::size_t i = 0; i < shifted.base_state.dim(); ++i) {
            shifted.base_state[i] *= phase;
        }
        for (auto &column : shifted.columns) {
            for (Complex &value : column) {
                value *= phase;
            }
        }
        const MetricTensor rotated = quantum_geometric_tensor(shifted);
        CHECK((rotated.qgt - reference.qgt).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("metric is hermitian and positive semidefinite") {
    auto rng = seeded_engine(32, SeedStream::kInstance);
    for (int trial = 0; trial < 50; ++trial) {
        const auto config = trial % 2 == 0 ? oracle::random_vqe_config(rng)
                                           : oracle::random_qaoa_config(rng);
        const MetricTensor metric =
            quantum_geometric_tensor(jacobian(config.circuit, config.params));
        CHECK((metric.qgt - metric.qgt.adjoint()).cwiseAbs().maxCoeff() <
              1e-12);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigen(
            metric.fubini_study);
        CHECK(eigen.eigenvalues().minCoeff() > -1e-10);
    }
}

TEST_CASE("natural direction with the identity metric is the gradient") {
    const MetricTensor metric = MetricTensor::identity(3);
    const std::vector<double> grad{0.5, -1.0, 2.0};
    const std::vector<double> direction = natural_direction(metric, grad);
    for (std::size_t i = 0; i < grad.size(); ++i) {
        CHECK(direction[i] == doctest::Approx(grad[i]).epsilon(1e-14));
    }
}

TEST_CASE("scalar natural direction divides by the metric") {
    MetricTensor metric;
    metric.qgt = Eigen::MatrixXcd::Constant(1, 1, Complex{0.25, 0.0});
    metric.fubini_study = Eigen::MatrixXd::Constant(1, 1, 0.25);
    metric.lambda = 0.0;
    const std::vector<double> grad{1.0};
    CHECK(natural_direction(metric, grad)[0] == doctest::Approx(4.0));

    // Vanishing metric with the default shift reports the plateau blow-up.
    metric.qgt.setZero();
    metric.fubini_study.setZero();
    metric.lambda = 1e-8;
    CHECK(natural_direction(metric, grad)[0] ==
          doctest::Approx(1e8).epsilon(1e-10));
}

TEST_CASE("solve satisfies the shifted linear system") {
    auto rng = seeded_engine(33, SeedStream::kInstance);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 8);
        Eigen::MatrixXd basis(d, d);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                basis(i, j) = uniform_symmetric(rng);
            }
        }
        MetricTensor metric;
        metric.fubini_study = basis.transpose() * basis +
                              0.1 * Eigen::MatrixXd::Identity(d, d);
        metric.qgt = metric.fubini_study.cast<Complex>();
        metric.lambda = trial % 2 == 0 ? 0.0 : 1e-6;
        std::vector<double> grad(d);
        for (double &g : grad) {
            g = uniform_symmetric(rng);
        }
        const std::vector<double> x = natural_direction(metric, grad);
        Eigen::MatrixXd shifted = metric.fubini_study;
        shifted.diagonal().array() += metric.lambda;
        const Eigen::VectorXd residual =
            shifted * Eigen::Map<const Eigen::VectorXd>(x.data(), d) -
            Eigen::Map<const Eigen::VectorXd>(grad.data(), d);
        CHECK(residual.cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("singular metric falls back to the pseudo-solve") {
    // Rank-1 metric with lambda = 0: Cholesky fails, the eigendecomposition
    // route solves within the range space.
    MetricTensor metric;
    metric.fubini_study = Eigen::MatrixXd::Zero(2, 2);
    metric.fubini_study(0, 0) = 1.0;
    metric.qgt = metric.fubini_study.cast<Complex>();
    metric.lambda = 0.0;
    const std::vector<double> grad{2.0, 0.0};
    const std::vector<double> x = natural_direction(metric, grad);
    CHECK(x[0] == doctest::Approx(2.0));
    CHECK(x[1] == doctest::Approx(0.0));
}

TEST_CASE("metric approximation masks the exact tensor") {
    auto rng = seeded_engine(34, SeedStream::kInstance);
    const Circuit circuit = build_vqe_ansatz(3, 2); // blocks 0,0,0,1,1,1,2,2,2
    const std::vector<double> params =
        oracle::random_params(circuit.n_params, rng);
    const MetricTensor full =
        quantum_geometric_tensor(jacobian(circuit, params));

    const MetricTensor block = approximate_metric(full, MetricApprox::BlockDiag,
                                                  circuit.param_blocks);
    const MetricTensor diag =
        approximate_metric(full, MetricApprox::Diag, circuit.param_blocks);
    const MetricTensor same =
        approximate_metric(full, MetricApprox::Full, circuit.param_blocks);

    CHECK((same.fubini_study - full.fubini_study).cwiseAbs().maxCoeff() ==
          0.0);
    for (int i = 0; i < circuit.n_params; ++i) {
        for (int j = 0; j < circuit.n_params; ++j) {
            const bool same_block =
                circuit.param_blocks[i] == circuit.param_blocks[j];
            if (same_block) {
                CHECK(block.fubini_study(i, j) == full.fubini_study(i, j));
            } else {
                CHECK(block.fubini_study(i, j) == 0.0);
                CHECK(block.qgt(i, j) == Complex{0.0, 0.0});
            }
            if (i != j) {
                CHECK(diag.fubini_study(i, j) == 0.0);
            } else {
                CHECK(diag.fubini_study(i, i) == full.fubini_study(i, i));
            }
        }
    }

    // Without block structure, block-diag degrades to diag.
    const MetricTensor fallback =
        approximate_metric(full, MetricApprox::BlockDiag, {});
    CHECK((fallback.fubini_study - diag.fubini_study).cwiseAbs().maxCoeff() ==
          0.0);

    CHECK_THROWS_AS(approximate_metric(full, MetricApprox::BlockDiag,
                                       std::vector<int>{0, 1}),
                    std::invalid_argument);
}

TEST_CASE("builders assign metric blocks by layer") {
    const Circuit vqe = build_vqe_ansatz(4, 2);
    REQUIRE(vqe.param_blocks.size() == 12);
    CHECK(vqe.param_blocks[0] == 0);
    CHECK(vqe.param_blocks[3] == 0);
    CHECK(vqe.param_blocks[4] == 1);
    CHECK(vqe.param_blocks[11] == 2);

    const EdgeList graph = default_graph_4();
    const Circuit qaoa = build_qaoa_circuit(graph, 3, mvc_hamiltonian(graph, 2.0));
    REQUIRE(qaoa.param_blocks.size() == 6);
    for (int p = 0; p < 6; ++p) {
        CHECK(qaoa.param_blocks[p] == p);
    }
}

TEST_CASE("non-finite inputs raise a numerical error") {
    MetricTensor metric = MetricTensor::identity(2);
    const std::vector<double> bad{1.0,
                                  std::numeric_limits<double>::infinity()};
    CHECK_THROWS_AS(natural_direction(metric, bad), NumericalError);
    CHECK_THROWS_AS(
        natural_direction(metric, std::vector<double>{1.0, 2.0, 3.0}),
        std::invalid_argument);
}

} // TEST_SUITE
