#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ycnn/common.hpp"

namespace ycnn {

// Dense row-major n-dimensional array. Carrier for images, feature maps,
// parameters and gradients. Values are expected to stay finite; the contract
// points that matter (model outputs, losses, gradients) verify this with
// check_finite and fail loudly.
template <typename T>
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
    data_.assign(numel_of(shape_), T(0));
  }

  Tensor(std::vector<int> shape, std::vector<T> data)
      : shape_(std::move(shape)), data_(std::move(data)) {
    require(data_.size() == numel_of(shape_), ErrorCode::shape_mismatch,
            "tensor data length does not match shape");
  }

  static Tensor zeros_like(const Tensor& other) { return Tensor(other.shape_); }

  const std::vector<int>& shape() const { return shape_; }
  int dim(int i) const { return shape_[static_cast<std::size_t>(i)]; }
  int ndim() const { return static_cast<int>(shape_.size()); }
  std::size_t numel() const { return data_.size(); }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

  T& at(int i, int j) { return data_[static_cast<std::size_t>(i) * dim(1) + j]; }
  const T& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * dim(1) + j]; }

  T& at(int c, int y, int x) {
    return data_[(static_cast<std::size_t>(c) * dim(1) + y) * dim(2) + x];
  }
  const T& at(int c, int y, int x) const {
    return data_[(static_cast<std::size_t>(c) * dim(1) + y) * dim(2) + x];
  }

  T& at(int n, int c, int y, int x) {
    return data_[((static_cast<std::size_t>(n) * dim(1) + c) * dim(2) + y) * dim(3) + x];
  }
  const T& at(int n, int c, int y, int x) const {
    return data_[((static_cast<std::size_t>(n) * dim(1) + c) * dim(2) + y) * dim(3) + x];
  }

  void fill(T v) { std::fill(data_.begin(), data_.end(), v); }

  Tensor reshaped(std::vector<int> new_shape) const {
    require(numel_of(new_shape) == data_.size(), ErrorCode::shape_mismatch,
            "reshape changes element count");
    return Tensor(std::move(new_shape), data_);
  }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

  std::string shape_str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < shape_.size(); ++i) os << (i ? "x" : "") << shape_[i];
    os << "]";
    return os.str();
  }

  static std::size_t numel_of(const std::vector<int>& shape) {
    std::size_t n = 1;
    for (int d : shape) {
      require(d >= 0, ErrorCode::shape_mismatch, "negative extent");
      n *= static_cast<std::size_t>(d);
    }
    return n;
  }

 private:
  std::vector<int> shape_;
  std::vector<T> data_;
};

template <typename T>
bool all_finite(const Tensor<T>& t) {
  for (std::size_t i = 0; i < t.numel(); ++i)
    if (!std::isfinite(static_cast<double>(t[i]))) return false;
  return true;
}

template <typename T>
void check_finite(const Tensor<T>& t, const std::string& what) {
  if (!all_finite(t)) fail(ErrorCode::non_finite, what + " contains NaN/Inf");
}

template <typename T>
void check_same_shape(const Tensor<T>& a, const Tensor<T>& b, const std::string& what) {
  require(a.same_shape(b), ErrorCode::shape_mismatch,
          what + ": " + a.shape_str() + " vs " + b.shape_str());
}

template <typename T>
std::size_t argmax_index(const Tensor<T>& t) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < t.numel(); ++i)
    if (t[i] > t[best]) best = i;  // ties keep the lowest row-major index
  return best;
}

template <typename T>
T max_value(const Tensor<T>& t) {
  require(t.numel() > 0, ErrorCode::bad_argument, "max of empty tensor");
  return t[argmax_index(t)];
}

}  // namespace ycnn
