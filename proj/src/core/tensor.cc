// mmchain/core/tensor.cc

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

#include "mmchain/core/tensor.h"

#include <cmath>
#include <sstream>

namespace mmchain {

void Fail(const std::string &msg) { throw Error(msg); }

std::int64_t ShapeSize(const Shape &shape) {
  std::int64_t n = 1;
  for (int d : shape) {
    if (d <= 0) Fail("invalid dimension " + std::to_string(d) + " in shape " + ShapeStr(shape));
    n *= d;
  }
  return n;
}

std::string ShapeStr(const Shape &shape) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) os << ",";
    os << shape[i];
  }
  os << "]";
  return os.str();
}

Tensor::Tensor(Shape shape) : shape_(std::move(shape)) {
  data_.assign(static_cast<size_t>(ShapeSize(shape_)), 0.0);
}

Tensor::Tensor(Shape shape, std::vector<double> data) : shape_(std::move(shape)), data_(std::move(data)) {
  if (static_cast<std::int64_t>(data_.size()) != ShapeSize(shape_))
    Fail("tensor data length " + std::to_string(data_.size()) + " does not match shape " + ShapeStr(shape_));
}

Tensor Tensor::Full(const Shape &shape, double value) {
  Tensor t(shape);
  for (std::int64_t i = 0; i < t.size(); ++i) t.data_[i] = value;
  return t;
}

Tensor Tensor::Scalar(double value) {
  Tensor t;
  t.shape_.clear();
  t.data_.assign(1, value);
  return t;
}

Tensor Tensor::Vector(std::vector<double> data) {
  Tensor t;
  t.shape_ = {static_cast<int>(data.size())};
  t.data_ = std::move(data);
  return t;
}

double Tensor::item() const {
  if (size() != 1) Fail("item() on non-scalar tensor of shape " + ShapeStr(shape_));
  return data_[0];
}

void Tensor::FillZero() { std::fill(data_.begin(), data_.end(), 0.0); }

bool Tensor::AllFinite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace mmchain
