// Copyright 2026 The nmrvqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace nmrvqe {

enum class OptimizerMethod { kNelderMead, kParamShiftGd };

std::string_view to_string(OptimizerMethod method);

struct OptimizerOptions {
  OptimizerMethod method = OptimizerMethod::kNelderMead;
  int max_iterations = 5000;
  /// Nelder-Mead: objective spread over the simplex. Gradient descent:
  /// Euclidean norm of the gradient.
  double tolerance = 1e-10;
  /// Gradient-descent learning rate (radians per unit gradient).
  double step_size = 0.01;
  /// Edge length of the initial Nelder-Mead simplex, radians.
  double simplex_scale = 0.1;
};

/// Throws ErrorKind::kValidation unless tolerance > 0, max_iterations >= 1,
/// and the step sizes are positive.
void validate(const OptimizerOptions& options);

struct TraceEntry {
  int iteration = 0;
  /// Objective evaluations made so far (gradient evaluations included).
  std::size_t evaluations = 0;
  double best_objective = 0.0;
  std::vector<double> parameters;
};

using OptimizationTrace = std::vector<TraceEntry>;

struct OptimizationResult {
  std::vector<double> theta;
  double value = 0.0;
  OptimizationTrace trace;
  std::size_t evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Minimizes `objective` from `theta0`. One trace row is written per
/// iteration, with at least one iteration always performed. A NaN objective
/// value raises ErrorKind::kNumerical naming the offending parameters.
OptimizationResult minimize(const Objective& objective, std::span<const double> theta0,
                            const OptimizerOptions& options = {});

/// Two-point shift rule: component i is [E(θ + π/2·e_i) − E(θ − π/2·e_i)] / 2.
/// Exact when every parameter enters through a single uncontrolled Ry. A
/// parametrized CRY needs a four-term rule and is not covered.
std::vector<double> parameter_shift_gradient(const Objective& objective,
                                             std::span<const double> theta);

}  // namespace nmrvqe
