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

#include <Eigen/Dense>

#include <span>
#include <string>
#include <vector>

namespace mqng {

/// Quantum geometric tensor G and its real part, the Fubini-Study metric,
/// with the Tikhonov regularizer used by the natural-gradient solve.
struct MetricTensor {
    Eigen::MatrixXcd qgt;          // Hermitian d x d
    Eigen::MatrixXd fubini_study;  // Re(qgt), symmetric PSD
    double lambda = 0.0;

    static MetricTensor identity(int d, double lambda = 0.0);
};

/// G_ij = <d_i psi, d_j psi> - <d_i psi, psi><psi, d_j psi>, symmetrized to
/// exact Hermiticity. Gauge-invariant: a common phase on the base state and
/// all columns leaves G unchanged.
MetricTensor quantum_geometric_tensor(const StateJacobian &jac,
                                      double lambda = 0.0);

/// How much of the exact tensor the natural-gradient solve sees. BlockDiag
/// keeps entries whose parameters share a circuit layer (the conventional
/// QNG choice and the benchmark default); Diag keeps only the diagonal.
enum class MetricApprox { Full, BlockDiag, Diag };

std::string to_string(MetricApprox approx);
MetricApprox metric_approx_from_string(const std::string &name);

/// Masks the exact tensor for the requested approximation. `blocks` holds
/// the layer id per parameter; when empty, BlockDiag degrades to Diag.
MetricTensor approximate_metric(MetricTensor metric, MetricApprox approx,
                                std::span<const int> blocks = {});

/// Solves (g + lambda I) x = grad by Cholesky, falling back to a symmetric
/// eigendecomposition pseudo-solve when the shifted metric is not positive
/// definite. Never forms an explicit inverse. The natural-gradient step is
/// -eta * x.
std::vector<double> natural_direction(const MetricTensor &metric,
                                      std::span<const double> grad);

} // namespace mqng
