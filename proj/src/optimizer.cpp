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

#include "nmrvqe/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "nmrvqe/error.hpp"

namespace nmrvqe {

namespace {

constexpr double kReflection = 1.0;
constexpr double kExpansion = 2.0;
constexpr double kContraction = 0.5;
constexpr double kShrink = 0.5;

using Point = std::vector<double>;

class CountingObjective {
 public:
  explicit CountingObjective(const Objective& f) : f_(f) {}

  double operator()(std::span<const double> theta) {
    ++count_;
    const double value = f_(theta);
    if (std::isnan(value)) {
      std::ostringstream msg;
      msg << "objective returned NaN at theta = [";
      for (std::size_t i = 0; i < theta.size(); ++i) msg << (i ? ", " : "") << theta[i];
      msg << "]";
      fail(ErrorKind::kNumerical, msg.str());
    }
    return value;
  }

  std::size_t count() const noexcept { return count_; }

 private:
  const Objective& f_;
  std::size_t count_ = 0;
};

Point affine(const Point& origin, const Point& toward, double t) {
  Point out(origin.size());
  for (std::size_t i = 0; i < origin.size(); ++i) {
    out[i] = origin[i] + t * (toward[i] - origin[i]);
  }
  return out;
}

OptimizationResult nelder_mead(const Objective& objective, std::span<const double> theta0,
                               const OptimizerOptions& opts) {
  CountingObjective f(objective);
  const std::size_t n = theta0.size();

  std::vector<Point> simplex;
  simplex.emplace_back(theta0.begin(), theta0.end());
  for (std::size_t i = 0; i < n; ++i) {
    Point vertex(theta0.begin(), theta0.end());
    vertex[i] += opts.simplex_scale;
    simplex.push_back(std::move(vertex));
  }
  std::vector<double> values;
  values.reserve(simplex.size());
  for (const Point& p : simplex) values.push_back(f(p));

  std::vector<std::size_t> order(simplex.size());
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<Point> s2;
    std::vector<double> v2;
    for (std::size_t k : order) {
      s2.push_back(std::move(simplex[k]));
      v2.push_back(values[k]);
    }
    simplex = std::move(s2);
    values = std::move(v2);
  };
  sort_simplex();

  OptimizationResult result;
  for (int iteration = 1; iteration <= opts.max_iterations; ++iteration) {
    if (n > 0) {
      const std::size_t worst = n;
      Point centroid(n, 0.0);
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k][i];
      }
      for (double& c : centroid) c /= static_cast<double>(n);

      const Point reflected = affine(centroid, simplex[worst], -kReflection);
      const double f_reflected = f(reflected);

      bool shrink = false;
      if (f_reflected < values[0]) {
        const Point expanded = affine(centroid, reflected, kExpansion);
        const double f_expanded = f(expanded);
        if (f_expanded < f_reflected) {
          simplex[worst] = expanded;
          values[worst] = f_expanded;
        } else {
          simplex[worst] = reflected;
          values[worst] = f_reflected;
        }
      } else if (f_reflected < values[n - 1]) {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      } else if (f_reflected < values[worst]) {
        const Point outside = affine(centroid, reflected, kContraction);
        const double f_outside = f(outside);
        if (f_outside <= f_reflected) {
          simplex[worst] = outside;
          values[worst] = f_outside;
        } else {
          shrink = true;
        }
      } else {
        const Point inside = affine(centroid, simplex[worst], kContraction);
        const double f_inside = f(inside);
        if (f_inside < values[worst]) {
          simplex[worst] = inside;
          values[worst] = f_inside;
        } else {
          shrink = true;
        }
      }
      if (shrink) {
        for (std::size_t k = 1; k <= n; ++k) {
          simplex[k] = affine(simplex[0], simplex[k], kShrink);
          values[k] = f(simplex[k]);
        }
      }
      sort_simplex();
    }

    result.trace.push_back({iteration, f.count(), values[0], simplex[0]});
    if (values.back() - values.front() < opts.tolerance) {
      result.converged = true;
      break;
    }
  }

  result.theta = simplex[0];
  result.value = values[0];
  result.evaluations = f.count();
  return result;
}

OptimizationResult gradient_descent(const Objective& objective, std::span<const double> theta0,
                                    const OptimizerOptions& opts) {
  CountingObjective f(objective);
  const Objective counted = [&f](std::span<const double> t) { return f(t); };

  Point theta(theta0.begin(), theta0.end());
  double value = f(theta);
  OptimizationResult result;
  result.theta = theta;
  result.value = value;

  for (int iteration = 1; iteration <= opts.max_iterations; ++iteration) {
    const std::vector<double> grad = parameter_shift_gradient(counted, theta);
    double grad_norm = 0.0;
    for (double g : grad) grad_norm += g * g;
    grad_norm = std::sqrt(grad_norm);
    if (grad_norm < opts.tolerance) {
      result.trace.push_back({iteration, f.count(), result.value, result.theta});
      result.converged = true;
      break;
    }
    for (std::size_t i = 0; i < theta.size(); ++i) theta[i] -= opts.step_size * grad[i];
    value = f(theta);
    if (value < result.value) {
      result.value = value;
      result.theta = theta;
    }
    result.trace.push_back({iteration, f.count(), result.value, result.theta});
  }
  result.evaluations = f.count();
  return result;
}

}  // namespace

std::string_view to_string(OptimizerMethod method) {
  switch (method) {
    case OptimizerMethod::kNelderMead: return "nelder-mead";
    case OptimizerMethod::kParamShiftGd: return "param-shift-gd";
  }
  return "?";
}

void validate(const OptimizerOptions& options) {
  if (!(options.tolerance > 0.0)) fail(ErrorKind::kValidation, "tolerance must be positive");
  if (options.max_iterations < 1) {
    fail(ErrorKind::kValidation, "max_iterations must be at least 1");
  }
  if (!(options.step_size > 0.0)) fail(ErrorKind::kValidation, "step_size must be positive");
  if (!(options.simplex_scale > 0.0)) {
    fail(ErrorKind::kValidation, "simplex_scale must be positive");
  }
}

OptimizationResult minimize(const Objective& objective, std::span<const double> theta0,
                            const OptimizerOptions& options) {
  validate(options);
  switch (options.method) {
    case OptimizerMethod::kNelderMead: return nelder_mead(objective, theta0, options);
    case OptimizerMethod::kParamShiftGd: return gradient_descent(objective, theta0, options);
  }
  fail(ErrorKind::kValidation, "unknown optimizer method");
}

std::vector<double> parameter_shift_gradient(const Objective& objective,
                                             std::span<const double> theta) {
  constexpr double kShift = std::numbers::pi / 2.0;
  std::vector<double> grad(theta.size());
  Point shifted(theta.begin(), theta.end());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    shifted[i] = theta[i] + kShift;
    const double plus = objective(shifted);
    shifted[i] = theta[i] - kShift;
    const double minus = objective(shifted);
    shifted[i] = theta[i];
    grad[i] = (plus - minus) / 2.0;
  }
  return grad;
}

}  // namespace nmrvqe
