// Finite-difference gradient certification. Every analytic gradient in the
// repository is checked against central differences through this one oracle.

#pragma once

#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "avdet/tensor.hpp"

namespace avdet {

struct GradCheckResult {
  double max_rel_error = 0.0;
  std::string worst_param;
  std::size_t worst_index = 0;
  bool all_finite = true;  // false if any evaluation produced NaN/Inf
};

// loss_fn: evaluates the scalar computation at the current parameter values.
// grad_fn: zeroes gradients and runs one analytic forward/backward, leaving
// gradients in each Parameter. Relative error per component is
// |analytic - central| / max(1, |central|); the maximum over all components
// is returned. Non-finite values mark the result as failed with the
// offending parameter recorded.
GradCheckResult finite_difference_check(
    const std::function<double()>& loss_fn, const std::function<void()>& grad_fn,
    const std::vector<std::pair<std::string, Parameter*>>& params, double step = 1e-5);

}  // namespace avdet
