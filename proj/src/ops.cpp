#include "avdet/ops.hpp"

#include <algorithm>
#include <cmath>

#include "avdet/errors.hpp"

namespace avdet {

Tensor l2_normalize(const Tensor& x) {
  if (x.empty()) throw ShapeMismatch("l2_normalize: empty input");
  double sq = 0.0;
  for (double v : x.values) sq += v * v;
  const double norm = std::sqrt(sq);
  if (norm <= kNormEps) throw NearZeroNorm("l2_normalize: norm <= 1e-12");
  Tensor out = x;
  for (double& v : out.values) v /= norm;
  return out;
}

SoftmaxXent softmax_cross_entropy(const Tensor& logits, std::size_t target) {
  const std::size_t k = logits.numel();
  if (target >= k) throw IndexOutOfRange("softmax_cross_entropy: target out of range");
  double max_logit = logits[0];
  for (std::size_t i = 1; i < k; ++i) max_logit = std::max(max_logit, logits[i]);
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) sum += std::exp(logits[i] - max_logit);
  const double log_sum = std::log(sum) + max_logit;

  SoftmaxXent r;
  r.loss = log_sum - logits[target];
  r.grad_logits = Tensor::zeros({k});
  for (std::size_t i = 0; i < k; ++i) r.grad_logits[i] = std::exp(logits[i] - log_sum);
  r.grad_logits[target] -= 1.0;
  return r;
}

Tensor linear_forward(const Tensor& x, const Parameter& weight, const Parameter& bias) {
  const std::size_t n = x.rows(), in = x.cols();
  const std::size_t out = weight.value.rows();
  if (weight.value.cols() != in) throw ShapeMismatch("linear_forward: weight/input dims");
  if (bias.value.numel() != out) throw ShapeMismatch("linear_forward: bias dim");

  Tensor y = Tensor::zeros({n, out});
  for (std::size_t r = 0; r < n; ++r) {
    const double* xr = &x.values[r * in];
    double* yr = &y.values[r * out];
    for (std::size_t o = 0; o < out; ++o) yr[o] = bias.value[o];
    // accumulate over input dim outermost for contiguous weight rows
    for (std::size_t o = 0; o < out; ++o) {
      const double* w = &weight.value.values[o * in];
      double acc = yr[o];
      for (std::size_t i = 0; i < in; ++i) acc += w[i] * xr[i];
      yr[o] = acc;
    }
  }
  return y;
}

Tensor linear_backward(const Tensor& x, Parameter& weight, Parameter& bias, const Tensor& grad_out) {
  const std::size_t n = x.rows(), in = x.cols();
  const std::size_t out = weight.value.rows();
  if (grad_out.rows() != n || grad_out.cols() != out) throw ShapeMismatch("linear_backward: grad shape");

  Tensor dx = Tensor::zeros({n, in});
  for (std::size_t r = 0; r < n; ++r) {
    const double* xr = &x.values[r * in];
    const double* gr = &grad_out.values[r * out];
    double* dxr = &dx.values[r * in];
    for (std::size_t o = 0; o < out; ++o) {
      const double g = gr[o];
      if (g == 0.0) continue;
      const double* w = &weight.value.values[o * in];
      double* dw = &weight.grad.values[o * in];
      for (std::size_t i = 0; i < in; ++i) {
        dxr[i] += g * w[i];
        dw[i] += g * xr[i];
      }
      bias.grad[o] += g;
    }
  }
  return dx;
}

namespace {

// Uniform Glorot-style init; keeps activations at unit scale for the shallow
// stacks used here.
Tensor init_weight(std::size_t out, std::size_t in, Rng& rng) {
  Tensor w = Tensor::zeros({out, in});
  const double a = std::sqrt(6.0 / static_cast<double>(in + out));
  for (double& v : w.values) v = rng.uniform(-a, a);
  return w;
}

}  // namespace

Linear::Linear(std::size_t in_dim, std::size_t out_dim, Rng& rng)
    : weight(init_weight(out_dim, in_dim, rng)), bias(Tensor::zeros({out_dim})) {}

Tensor Linear::forward(const Tensor& x) {
  input_ = x;
  return linear_forward(x, weight, bias);
}

Tensor Linear::apply(const Tensor& x) const { return linear_forward(x, weight, bias); }

Tensor Linear::backward(const Tensor& grad_out) {
  return linear_backward(input_, weight, bias, grad_out);
}

Tensor Relu::forward(const Tensor& x) {
  input_ = x;
  return apply(x);
}

Tensor Relu::apply(const Tensor& x) const {
  Tensor y = x;
  for (double& v : y.values) v = v > 0.0 ? v : 0.0;
  return y;
}

Tensor Relu::backward(const Tensor& grad_out) {
  if (!grad_out.same_shape(input_)) throw ShapeMismatch("relu backward: grad shape");
  Tensor dx = grad_out;
  for (std::size_t i = 0; i < dx.numel(); ++i)
    if (input_[i] <= 0.0) dx[i] = 0.0;
  return dx;
}

Tensor RowL2Norm::forward(const Tensor& x) {
  output_ = apply(x);
  const std::size_t n = x.rows(), d = x.cols();
  norms_.assign(n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    double sq = 0.0;
    for (std::size_t c = 0; c < d; ++c) sq += x.at(r, c) * x.at(r, c);
    norms_[r] = std::sqrt(sq);
  }
  return output_;
}

Tensor RowL2Norm::apply(const Tensor& x) const {
  const std::size_t n = x.rows(), d = x.cols();
  Tensor y = x;
  for (std::size_t r = 0; r < n; ++r) {
    double sq = 0.0;
    for (std::size_t c = 0; c < d; ++c) sq += x.at(r, c) * x.at(r, c);
    const double norm = std::sqrt(sq);
    if (norm <= kNormEps) throw NearZeroNorm("RowL2Norm: degenerate row");
    for (std::size_t c = 0; c < d; ++c) y.at(r, c) /= norm;
  }
  return y;
}

Tensor RowL2Norm::backward(const Tensor& grad_out) {
  // d e_i / d z_j = (delta_ij - e_i e_j) / ||z||
  const std::size_t n = output_.rows(), d = output_.cols();
  if (!grad_out.same_shape(output_)) throw ShapeMismatch("RowL2Norm backward: grad shape");
  Tensor dx = Tensor::zeros(output_.shape);
  for (std::size_t r = 0; r < n; ++r) {
    double dot = 0.0;
    for (std::size_t c = 0; c < d; ++c) dot += grad_out.at(r, c) * output_.at(r, c);
    for (std::size_t c = 0; c < d; ++c)
      dx.at(r, c) = (grad_out.at(r, c) - dot * output_.at(r, c)) / norms_[r];
  }
  return dx;
}

Mlp::Mlp(std::size_t in_dim, std::size_t hidden_dim, std::size_t out_dim, Rng& rng)
    : l1(in_dim, hidden_dim, rng), l2(hidden_dim, out_dim, rng) {}

Tensor Mlp::forward(const Tensor& x) { return l2.forward(relu_.forward(l1.forward(x))); }

Tensor Mlp::apply(const Tensor& x) const { return l2.apply(relu_.apply(l1.apply(x))); }

Tensor Mlp::backward(const Tensor& grad_out) {
  return l1.backward(relu_.backward(l2.backward(grad_out)));
}

void Mlp::collect_parameters(const std::string& prefix,
                             std::vector<std::pair<std::string, Parameter*>>& out) {
  out.emplace_back(prefix + ".l1.weight", &l1.weight);
  out.emplace_back(prefix + ".l1.bias", &l1.bias);
  out.emplace_back(prefix + ".l2.weight", &l2.weight);
  out.emplace_back(prefix + ".l2.bias", &l2.bias);
}

SgdMomentum::SgdMomentum(std::vector<Parameter*> params, double lr, double momentum)
    : params_(std::move(params)), lr_(lr), momentum_(momentum) {
  velocity_.reserve(params_.size());
  for (const Parameter* p : params_) velocity_.push_back(Tensor::zeros(p->value.shape));
}

void SgdMomentum::step() {
  for (std::size_t i = 0; i < params_.size(); ++i) {
    Parameter& p = *params_[i];
    Tensor& v = velocity_[i];
    for (std::size_t j = 0; j < p.numel(); ++j) {
      v[j] = momentum_ * v[j] + p.grad[j];
      p.value[j] -= lr_ * v[j];
    }
  }
}

void SgdMomentum::zero_grad() {
  for (Parameter* p : params_) p->zero_grad();
}

}  // namespace avdet
