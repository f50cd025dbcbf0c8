// mmchain/core/tensor.h

// Copyright 2026  mmchain authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmchain {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

[[noreturn]] void Fail(const std::string &msg);

// Shape of a dense tensor. Rank 0 (scalar), 1 (vector) and 2 (matrix) are the
// only ranks the engine needs.
using Shape = std::vector<int>;

std::int64_t ShapeSize(const Shape &shape);
std::string ShapeStr(const Shape &shape);

// Dense 64-bit tensor value. Plain data, no graph involvement.
class Tensor {
 public:
  Tensor() : shape_{0}, data_() {}
  explicit Tensor(Shape shape);
  Tensor(Shape shape, std::vector<double> data);

  static Tensor Zeros(const Shape &shape) { return Tensor(shape); }
  static Tensor Full(const Shape &shape, double value);
  static Tensor Scalar(double value);
  static Tensor Vector(std::vector<double> data);

  const Shape &shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  std::int64_t size() const { return static_cast<std::int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  // Matrix accessors; valid for rank-2 tensors only.
  int rows() const { return shape_[0]; }
  int cols() const { return shape_[1]; }

  double *data() { return data_.data(); }
  const double *data() const { return data_.data(); }

  double &operator[](std::int64_t i) { return data_[i]; }
  double operator[](std::int64_t i) const { return data_[i]; }
  double &at(int r, int c) { return data_[static_cast<std::int64_t>(r) * shape_[1] + c]; }
  double at(int r, int c) const { return data_[static_cast<std::int64_t>(r) * shape_[1] + c]; }

  // Scalar value; fails on non-scalar tensors.
  double item() const;

  bool SameShape(const Tensor &other) const { return shape_ == other.shape_; }
  void FillZero();
  bool AllFinite() const;

 private:
  Shape shape_;
  std::vector<double> data_;
};

}  // namespace mmchain
