// Dense row-major 64-bit float tensors and trainable parameters.
// Everything in this project is small enough that plain vectors with
// sequential summation are both fast enough and bit-reproducible.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "avdet/errors.hpp"

namespace avdet {

struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> values;

  Tensor() = default;
  Tensor(std::vector<std::size_t> s, std::vector<double> v) : shape(std::move(s)), values(std::move(v)) {
    if (values.size() != numel_of(shape)) throw ShapeMismatch("tensor: values do not match shape");
  }

  static Tensor zeros(std::vector<std::size_t> s) {
    std::size_t n = numel_of(s);
    return Tensor(std::move(s), std::vector<double>(n, 0.0));
  }

  static Tensor vector(std::vector<double> v) {
    std::size_t n = v.size();
    return Tensor({n}, std::move(v));
  }

  std::size_t numel() const { return values.size(); }
  bool empty() const { return values.empty(); }

  // 2-D accessors; all matrix-shaped data in the project uses these.
  std::size_t rows() const { return shape.empty() ? 0 : shape[0]; }
  std::size_t cols() const { return shape.size() < 2 ? 1 : shape[1]; }
  double& at(std::size_t r, std::size_t c) { return values[r * cols() + c]; }
  double at(std::size_t r, std::size_t c) const { return values[r * cols() + c]; }

  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }

  void fill(double x) { std::fill(values.begin(), values.end(), x); }

  bool same_shape(const Tensor& other) const { return shape == other.shape; }

  static std::size_t numel_of(const std::vector<std::size_t>& s) {
    std::size_t n = 1;
    for (std::size_t e : s) n *= e;
    return s.empty() ? 0 : n;
  }
};

// A trainable value with its gradient accumulator. The two tensors always
// share a shape; gradients are zeroed between optimizer steps.
struct Parameter {
  Tensor value;
  Tensor grad;

  Parameter() = default;
  explicit Parameter(Tensor v) : value(std::move(v)), grad(Tensor::zeros(value.shape)) {}

  std::size_t numel() const { return value.numel(); }
  void zero_grad() { grad.fill(0.0); }
};

}  // namespace avdet
