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

#include <cmath>
#include <stdexcept>
#include <string>

namespace mqng {

MetricTensor MetricTensor::identity(int d, double lambda) {
    return MetricTensor{Eigen::MatrixXcd::Identity(d, d),
                        Eigen::MatrixXd::Identity(d, d), lambda};
}

MetricTensor quantum_geometric_tensor(const StateJacobian &jac, double lambda) {
    const std::size_t dim = jac.base_state.dim();
    const int d = static_cast<int>(jac.columns.size());
    for (const auto &column : jac.columns) {
        if (column.size() != dim) {
            throw std::invalid_argument(
                "jacobian column length does not match the base state");
        }
    }

    if (d == 0) {
        return MetricTensor{Eigen::MatrixXcd(0, 0), Eigen::MatrixXd(0, 0),
                            lambda};
    }

    Eigen::MatrixXcd cols(dim, d);
    for (int p = 0; p < d; ++p) {
        cols.col(p) = Eigen::Map<const Eigen::VectorXcd>(
            jac.columns[p].data(), static_cast<Eigen::Index>(dim));
    }
    const Eigen::Map<const Eigen::VectorXcd> psi(
        jac.base_state.amplitudes().data(), static_cast<Eigen::Index>(dim));

    // Berry connection <d_i psi, psi>; subtracting its outer product makes
    // the tensor invariant under parameter-dependent phase gauges.
    const Eigen::VectorXcd connection = cols.adjoint() * psi;
    Eigen::MatrixXcd qgt = cols.adjoint() * cols;
    qgt.noalias() -= connection * connection.adjoint();

    const double asymmetry = (qgt - qgt.adjoint()).cwiseAbs().maxCoeff();
    if (!(asymmetry < 1e-10)) {
        throw NumericalError("quantum geometric tensor asymmetry " +
                             std::to_string(asymmetry) + " exceeds 1e-10");
    }
    qgt = 0.5 * (qgt + qgt.adjoint()).eval();

    MetricTensor metric;
    metric.qgt = std::move(qgt);
    metric.fubini_study = metric.qgt.real();
    metric.fubini_study = 0.5 * (metric.fubini_study +
                                 metric.fubini_study.transpose()).eval();
    metric.lambda = lambda;
    return metric;
}

std::string to_string(MetricApprox approx) {
    switch (approx) {
    case MetricApprox::Full:
        return "full";
    case MetricApprox::BlockDiag:
        return "block-diag";
    case MetricApprox::Diag:
        return "diag";
    }
    throw std::invalid_argument("unknown metric approximation");
}

MetricApprox metric_approx_from_string(const std::string &name) {
    if (name == "full") return MetricApprox::Full;
    if (name == "block-diag") return MetricApprox::BlockDiag;
    if (name == "diag") return MetricApprox::Diag;
    throw std::invalid_argument("unknown metric approximation: '" + name +
                                "'");
}

MetricTensor approximate_metric(MetricTensor metric, MetricApprox approx,
                                std::span<const int> blocks) {
    if (approx == MetricApprox::Full) {
        return metric;
    }
    const Eigen::Index d = metric.fubini_study.rows();
    if (!blocks.empty() &&
        static_cast<Eigen::Index>(blocks.size()) != d) {
        throw std::invalid_argument(
            "parameter block list does not match the metric dimension");
    }
    const bool use_blocks = approx == MetricApprox::BlockDiag &&
                            !blocks.empty();
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            const bool keep =
                i == j || (use_blocks && blocks[i] == blocks[j]);
            if (!keep) {
                metric.qgt(i, j) = Complex{0.0, 0.0};
                metric.fubini_study(i, j) = 0.0;
            }
        }
    }
    return metric;
}

std::vector<double> natural_direction(const MetricTensor &metric,
                                      std::span<const double> grad) {
    const Eigen::Index d = metric.fubini_study.rows();
    if (metric.fubini_study.cols() != d ||
        static_cast<Eigen::Index>(grad.size()) != d) {
        throw std::invalid_argument(
            "gradient length does not match the metric dimension");
    }
    const Eigen::Map<const Eigen::VectorXd> rhs(grad.data(), d);
    if (!rhs.allFinite() || !metric.fubini_study.allFinite()) {
        throw NumericalError("non-finite metric or gradient entries");
    }

    Eigen::MatrixXd shifted = metric.fubini_study;
    shifted.diagonal().array() += metric.lambda;

    Eigen::VectorXd x;
    Eigen::LLT<Eigen::MatrixXd> llt(shifted);
    if (llt.info() == Eigen::Success) {
        x = llt.solve(rhs);
    } else {
        // Plateau-regime metrics can be singular even after the shift;
        // a thresholded eigendecomposition keeps the step well defined.
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigen(shifted);
        if (eigen.info() != Eigen::Success) {
            throw NumericalError("eigendecomposition of the metric failed");
        }
        const Eigen::VectorXd &values = eigen.eigenvalues();
        const double cutoff =
            1e-14 * std::max(1.0, values.cwiseAbs().maxCoeff());
        Eigen::VectorXd inverted = Eigen::VectorXd::Zero(d);
        for (Eigen::Index i = 0; i < d; ++i) {
            if (values[i] > cutoff) {
                inverted[i] = 1.0 / values[i];
            }
        }
        x = eigen.eigenvectors() *
            (inverted.asDiagonal() * (eigen.eigenvectors().transpose() * rhs));
    }
    if (!x.allFinite()) {
        throw NumericalError("natural direction solve produced non-finite "
                             "entries");
    }
    return std::vector<double>(x.data(), x.data() + d);
}

} // namespace mqng
