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
#include "mqng/optimizer.hpp"

#include "mqng/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace mqng {

namespace {

void check_finite(std::span<const double> grad) {
    for (double g : grad) {
        if (!std::isfinite(g)) {
            throw NumericalError("non-finite gradient entry");
        }
    }
}

void check_dimension(const OptimizerState &state,
                     std::span<const double> grad) {
    if (state.delta.size() != grad.size()) {
        throw std::invalid_argument(
            "optimizer state dimension does not match the gradient");
    }
}

} // namespace

std::string to_string(OptimizerKind kind) {
    switch (kind) {
    case OptimizerKind::Adam:
        return "adam";
    case OptimizerKind::Momentum:
        return "momentum";
    case OptimizerKind::Qng:
        return "qng";
    case OptimizerKind::MomentumQng:
        return "momentum_qng";
    }
    throw std::invalid_argument("unknown optimizer kind");
}

OptimizerKind optimizer_kind_from_string(const std::string &name) {
    if (name == "adam") return OptimizerKind::Adam;
    if (name == "momentum") return OptimizerKind::Momentum;
    if (name == "qng") return OptimizerKind::Qng;
    if (name == "momentum_qng") return OptimizerKind::MomentumQng;
    throw std::invalid_argument("unknown optimizer: '" + name + "'");
}

bool uses_metric(OptimizerKind kind) {
    return kind == OptimizerKind::Qng || kind == OptimizerKind::MomentumQng;
}

void OptimizerConfig::validate() const {
    if (!(eta > 0.0)) {
        throw std::invalid_argument("eta must be > 0");
    }
    if (!(rho >= 0.0 && rho < 1.0)) {
        throw std::invalid_argument("rho must be in [0, 1)");
    }
    if (!(lambda >= 0.0)) {
        throw std::invalid_argument("lambda must be >= 0");
    }
    if (!(adam_beta1 >= 0.0 && adam_beta1 < 1.0) ||
        !(adam_beta2 >= 0.0 && adam_beta2 < 1.0) || !(adam_eps > 0.0)) {
        throw std::invalid_argument("invalid Adam hyperparameters");
    }
}

OptimizerState OptimizerState::zeros(int d) {
    OptimizerState state;
    state.delta.assign(d, 0.0);
    state.force.assign(d, 0.0);
    state.adam_m.assign(d, 0.0);
    state.adam_v.assign(d, 0.0);
    return state;
}

std::pair<double, double> langevin_to_hyperparams(const LangevinParams &p) {
    if (!(p.dt > 0.0)) {
        throw std::invalid_argument("dt must be > 0");
    }
    if (!(p.gamma >= 0.0)) {
        throw std::invalid_argument("gamma must be >= 0");
    }
    const double half_friction = p.gamma * p.dt / 2.0;
    const double rho = (1.0 - half_friction) / (1.0 + half_friction);
    const double eta = p.dt * p.dt / (1.0 + half_friction);
    return {rho, eta};
}

LangevinParams hyperparams_to_langevin(double rho, double eta) {
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw std::invalid_argument("rho must be in [0, 1]");
    }
    if (!(eta > 0.0)) {
        throw std::invalid_argument("eta must be > 0");
    }
    const double dt = std::sqrt(2.0 * eta / (1.0 + rho));
    const double gamma = (2.0 / dt) * (1.0 - rho) / (1.0 + rho);
    return LangevinParams{gamma, dt};
}

std::vector<double> momentum_step(OptimizerState &state,
                                  std::span<const double> grad,
                                  const OptimizerConfig &cfg) {
    check_dimension(state, grad);
    check_finite(grad);
    std::vector<double> delta(grad.size());
    for (std::size_t i = 0; i < grad.size(); ++i) {
        state.force[i] = -grad[i];
        delta[i] = cfg.rho * state.delta[i] - cfg.eta * grad[i];
    }
    state.delta = delta;
    ++state.step_count;
    return delta;
}

std::vector<double> qng_step(std::span<const double> grad,
                             const MetricTensor &metric, double eta) {
    const std::vector<double> direction = natural_direction(metric, grad);
    std::vector<double> delta(direction.size());
    for (std::size_t i = 0; i < direction.size(); ++i) {
        delta[i] = -(eta * direction[i]);
    }
    return delta;
}

std::vector<double> momentum_qng_step(OptimizerState &state,
                                      std::span<const double> grad,
                                      const MetricTensor &metric,
                                      const OptimizerConfig &cfg) {
    check_dimension(state, grad);
    check_finite(grad);
    const std::vector<double> direction = natural_direction(metric, grad);
    std::vector<double> delta(grad.size());
    for (std::size_t i = 0; i < grad.size(); ++i) {
        state.force[i] = -direction[i];
        // Written as rho*delta + (-(eta*x)) so that rho = 0 reproduces
        // qng_step exactly, including signed zeros.
        delta[i] = cfg.rho * state.delta[i] + -(cfg.eta * direction[i]);
    }
    state.delta = delta;
    ++state.step_count;
    return delta;
}

std::vector<double> adam_step(OptimizerState &state,
                              std::span<const double> grad,
                              const OptimizerConfig &cfg) {
    check_dimension(state, grad);
    check_finite(grad);
    ++state.step_count;
    const double t = static_cast<double>(state.step_count);
    const double m_correction = 1.0 - std::pow(cfg.adam_beta1, t);
    const double v_correction = 1.0 - std::pow(cfg.adam_beta2, t);
    std::vector<double> delta(grad.size());
    for (std::size_t i = 0; i < grad.size(); ++i) {
        state.force[i] = -grad[i];
        state.adam_m[i] =
            cfg.adam_beta1 * state.adam_m[i] + (1.0 - cfg.adam_beta1) * grad[i];
        state.adam_v[i] = cfg.adam_beta2 * state.adam_v[i] +
                          (1.0 - cfg.adam_beta2) * grad[i] * grad[i];
        const double m_hat = state.adam_m[i] / m_correction;
        const double v_hat = state.adam_v[i] / v_correction;
        delta[i] = -cfg.eta * m_hat / (std::sqrt(v_hat) + cfg.adam_eps);
    }
    state.delta = delta;
    return delta;
}

} // namespace mqng
