// Copyright 2026 The OMD Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OMD_LINALG_H_
#define OMD_LINALG_H_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace omd {

using Vec = std::vector<double>;

// Raised for any input that violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

double Dot(std::span<const double> a, std::span<const double> b);
double NormL1(std::span<const double> a);
double NormL2(std::span<const double> a);
double NormInf(std::span<const double> a);
double MaxEntry(std::span<const double> a);
double MinEntry(std::span<const double> a);
double Sum(std::span<const double> a);

Vec Subtract(std::span<const double> a, std::span<const double> b);
Vec Add(std::span<const double> a, std::span<const double> b);
Vec Scale(std::span<const double> a, double s);
// a + s * b
Vec Axpy(std::span<const double> a, double s, std::span<const double> b);

bool AllFinite(std::span<const double> a);
Vec Uniform(std::size_t n);

// Dense row-major matrix. Small problem instances only.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, Vec data);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  const Vec& data() const { return data_; }

  // A x
  Vec Apply(std::span<const double> x) const;
  // A^T y
  Vec ApplyTransposed(std::span<const double> y) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

// Compressed sparse rows; used for equality systems M f = b.
class SparseRows {
 public:
  struct Entry {
    std::size_t col;
    double value;
  };

  explicit SparseRows(std::size_t cols = 0) : cols_(cols) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  void AddRow(std::vector<Entry> entries);
  std::span<const Entry> row(std::size_t i) const { return rows_[i]; }

  Vec Apply(std::span<const double> x) const;
  Vec ApplyTransposed(std::span<const double> y) const;

 private:
  std::size_t cols_;
  std::vector<std::vector<Entry>> rows_;
};

}  // namespace omd

#endif  // OMD_LINALG_H_
