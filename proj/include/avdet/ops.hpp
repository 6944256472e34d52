// Differentiable building blocks: L2 normalization, softmax cross-entropy and
// linear layers with exact analytic gradients. Layers cache their last forward
// pass so a single forward/backward pair per batch needs no tape.

#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "avdet/rng.hpp"
#include "avdet/tensor.hpp"

namespace avdet {

constexpr double kNormEps = 1e-12;

// Unit-normalizes a vector. Throws NearZeroNorm for degenerate inputs; callers
// must treat that as a hard error, not a value to continue with.
Tensor l2_normalize(const Tensor& x);

// Loss and gradient of -log softmax(logits)[target]. Stable under large
// logits via max subtraction.
struct SoftmaxXent {
  double loss;
  Tensor grad_logits;  // softmax(logits) - onehot(target)
};
SoftmaxXent softmax_cross_entropy(const Tensor& logits, std::size_t target);

// Row-wise y = x W^T + b for x of shape N x in, W of shape out x in.
Tensor linear_forward(const Tensor& x, const Parameter& weight, const Parameter& bias);

// Accumulates dW, db from the cached input and returns dx.
Tensor linear_backward(const Tensor& x, Parameter& weight, Parameter& bias, const Tensor& grad_out);

// ---------------------------------------------------------------------------
// Layers. forward() caches for the next backward(); apply() is the const
// inference path with no cache.
// ---------------------------------------------------------------------------

class Linear {
 public:
  Linear() = default;
  Linear(std::size_t in_dim, std::size_t out_dim, Rng& rng);

  Tensor forward(const Tensor& x);
  Tensor apply(const Tensor& x) const;
  Tensor backward(const Tensor& grad_out);

  Parameter weight;  // out x in
  Parameter bias;    // out

 private:
  Tensor input_;
};

class Relu {
 public:
  Tensor forward(const Tensor& x);
  Tensor apply(const Tensor& x) const;
  Tensor backward(const Tensor& grad_out);

 private:
  Tensor input_;
};

// Row-wise L2 normalization with full Jacobian backward.
class RowL2Norm {
 public:
  Tensor forward(const Tensor& x);
  Tensor apply(const Tensor& x) const;
  Tensor backward(const Tensor& grad_out);

 private:
  Tensor output_;
  std::vector<double> norms_;
};

// Linear -> ReLU -> Linear. The standard 2-layer head used everywhere.
class Mlp {
 public:
  Mlp() = default;
  Mlp(std::size_t in_dim, std::size_t hidden_dim, std::size_t out_dim, Rng& rng);

  Tensor forward(const Tensor& x);
  Tensor apply(const Tensor& x) const;
  Tensor backward(const Tensor& grad_out);

  void collect_parameters(const std::string& prefix, std::vector<std::pair<std::string, Parameter*>>& out);

  Linear l1, l2;

 private:
  Relu relu_;
};

// SGD with momentum; one velocity buffer per parameter, fixed update order.
class SgdMomentum {
 public:
  SgdMomentum(std::vector<Parameter*> params, double lr, double momentum);
  void step();
  void zero_grad();

 private:
  std::vector<Parameter*> params_;
  std::vector<Tensor> velocity_;
  double lr_, momentum_;
};

}  // namespace avdet
