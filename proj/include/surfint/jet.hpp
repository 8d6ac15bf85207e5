#pragma once

#include <array>
#include <cassert>
#include <cstddef>

namespace surfint {

/// Maximum number of independent variables a Jet2 can carry.
inline constexpr std::size_t kMaxVariables = 3;

/// Second-order forward-mode jet: value, gradient and Hessian with respect to
/// up to kMaxVariables independent variables. The Hessian is stored as its
/// upper triangle, so it is symmetric by construction.
class Jet2 {
 public:
  Jet2() = default;

  static Jet2 constant(double value, std::size_t num_vars) {
    assert(num_vars <= kMaxVariables);
    Jet2 j;
    j.n_ = num_vars;
    j.value_ = value;
    return j;
  }

  static Jet2 variable(double value, std::size_t num_vars, std::size_t index) {
    Jet2 j = constant(value, num_vars);
    assert(index < num_vars);
    j.grad_[index] = 1.0;
    return j;
  }

  std::size_t size() const { return n_; }
  double value() const { return value_; }
  double grad(std::size_t i) const { return grad_[i]; }
  double hess(std::size_t i, std::size_t j) const { return hess_[tri(i, j)]; }

  // Applies a scalar function with f(a) = f0, f'(a) = f1, f''(a) = f2.
  Jet2 chain(double f0, double f1, double f2) const {
    Jet2 r;
    r.n_ = n_;
    r.value_ = f0;
    for (std::size_t i = 0; i < n_; ++i) r.grad_[i] = f1 * grad_[i];
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j)
        r.hess_[tri(i, j)] = f1 * hess_[tri(i, j)] + f2 * grad_[i] * grad_[j];
    return r;
  }

  friend Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r = a;
    r.value_ += b.value_;
    for (std::size_t k = 0; k < kGradSize; ++k) r.grad_[k] += b.grad_[k];
    for (std::size_t k = 0; k < kHessSize; ++k) r.hess_[k] += b.hess_[k];
    return r;
  }

  friend Jet2 operator-(const Jet2& a, const Jet2& b) {
    Jet2 r = a;
    r.value_ -= b.value_;
    for (std::size_t k = 0; k < kGradSize; ++k) r.grad_[k] -= b.grad_[k];
    for (std::size_t k = 0; k < kHessSize; ++k) r.hess_[k] -= b.hess_[k];
    return r;
  }

  friend Jet2 operator-(const Jet2& a) {
    Jet2 r = a;
    r.value_ = -r.value_;
    for (auto& g : r.grad_) g = -g;
    for (auto& h : r.hess_) h = -h;
    return r;
  }

  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.n_ = a.n_;
    r.value_ = a.value_ * b.value_;
    for (std::size_t i = 0; i < a.n_; ++i)
      r.grad_[i] = a.value_ * b.grad_[i] + b.value_ * a.grad_[i];
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t j = i; j < a.n_; ++j) {
        const std::size_t k = tri(i, j);
        r.hess_[k] = a.value_ * b.hess_[k] + b.value_ * a.hess_[k] +
                     a.grad_[i] * b.grad_[j] + a.grad_[j] * b.grad_[i];
      }
    return r;
  }

  friend Jet2 operator*(double s, const Jet2& a) {
    Jet2 r = a;
    r.value_ *= s;
    for (auto& g : r.grad_) g *= s;
    for (auto& h : r.hess_) h *= s;
    return r;
  }

 private:
  static constexpr std::size_t kGradSize = kMaxVariables;
  static constexpr std::size_t kHessSize = kMaxVariables * (kMaxVariables + 1) / 2;

  // Row-major upper-triangle index for a kMaxVariables-square matrix.
  static constexpr std::size_t tri(std::size_t i, std::size_t j) {
    if (i > j) {
      const std::size_t t = i;
      i = j;
      j = t;
    }
    return i * kMaxVariables - i * (i + 1) / 2 + j;
  }

  std::size_t n_ = 0;
  double value_ = 0.0;
  std::array<double, kGradSize> grad_{};
  std::array<double, kHessSize> hess_{};
};

}  // namespace surfint
