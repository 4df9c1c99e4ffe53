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

#include "mqng/metric.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mqng {

enum class OptimizerKind { Adam, Momentum, Qng, MomentumQng };

std::string to_string(OptimizerKind kind);
OptimizerKind optimizer_kind_from_string(const std::string &name);
bool uses_metric(OptimizerKind kind);

struct OptimizerConfig {
    OptimizerKind kind = OptimizerKind::MomentumQng;
    double eta = 0.1;
    double rho = 0.9;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.99;
    double adam_eps = 1e-8;
    double lambda = 1e-8; // forwarded to the metric solve
    // Metric view the QNG-family steps solve against.
    MetricApprox metric_approx = MetricApprox::BlockDiag;

    void validate() const;
};

/// Per-trial mutable state. The last displacement starts at zero.
struct OptimizerState {
    std::vector<double> delta;  // last parameter displacement
    std::vector<double> force;  // last applied force
    std::vector<double> adam_m; // first-moment accumulator
    std::vector<double> adam_v; // second-moment accumulator
    long step_count = 0;

    static OptimizerState zeros(int d);
};

/// Friction/time-step parametrization of the underdamped update, unit mass.
struct LangevinParams {
    double gamma = 0.0; // friction coefficient, >= 0
    double dt = 0.0;    // time step, > 0
};

/// rho = (1 - gamma dt/2)/(1 + gamma dt/2), eta = dt^2/(1 + gamma dt/2).
/// The identity eta = (1 + rho)/2 * dt^2 holds to rounding.
std::pair<double, double> langevin_to_hyperparams(const LangevinParams &p);

/// Inverse map: dt = sqrt(2 eta / (1 + rho)), gamma = (2/dt)(1 - rho)/(1 + rho).
/// rho = 1 maps to gamma = 0 exactly.
LangevinParams hyperparams_to_langevin(double rho, double eta);

/// delta_new = rho * delta - eta * grad. Returns the new displacement and
/// stores it in the state.
std::vector<double> momentum_step(OptimizerState &state,
                                  std::span<const double> grad,
                                  const OptimizerConfig &cfg);

/// delta = -eta * natural_direction(metric, grad).
std::vector<double> qng_step(std::span<const double> grad,
                             const MetricTensor &metric, double eta);

/// delta_new = rho * delta - eta * natural_direction(metric, grad).
/// With rho = 0 this equals qng_step bit for bit.
std::vector<double> momentum_qng_step(OptimizerState &state,
                                      std::span<const double> grad,
                                      const MetricTensor &metric,
                                      const OptimizerConfig &cfg);

/// Bias-corrected first/second-moment update;
/// delta = -eta * m_hat / (sqrt(v_hat) + eps).
std::vector<double> adam_step(OptimizerState &state,
                              std::span<const double> grad,
                              const OptimizerConfig &cfg);

} // namespace mqng
