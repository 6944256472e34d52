#include "avdet/grad_check.hpp"

#include <cmath>

namespace avdet {

GradCheckResult finite_difference_check(
    const std::function<double()>& loss_fn, const std::function<void()>& grad_fn,
    const std::vector<std::pair<std::string, Parameter*>>& params, double step) {
  GradCheckResult result;

  grad_fn();
  std::vector<Tensor> analytic;
  analytic.reserve(params.size());
  for (const auto& [name, p] : params) analytic.push_back(p->grad);

  for (std::size_t pi = 0; pi < params.size(); ++pi) {
    Parameter& p = *params[pi].second;
    for (std::size_t i = 0; i < p.numel(); ++i) {
      const double saved = p.value[i];
      p.value[i] = saved + step;
      const double f_plus = loss_fn();
      p.value[i] = saved - step;
      const double f_minus = loss_fn();
      p.value[i] = saved;

      if (!std::isfinite(f_plus) || !std::isfinite(f_minus)) {
        result.all_finite = false;
        result.max_rel_error = std::numeric_limits<double>::infinity();
        result.worst_param = params[pi].first;
        result.worst_index = i;
        return result;
      }

      const double central = (f_plus - f_minus) / (2.0 * step);
      const double err = std::abs(analytic[pi][i] - central) / std::max(1.0, std::abs(central));
      if (err > result.max_rel_error) {
        result.max_rel_error = err;
        result.worst_param = params[pi].first;
        result.worst_index = i;
      }
    }
  }
  return result;
}

}  // namespace avdet
