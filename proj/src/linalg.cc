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

#include "omd/linalg.h"

#include <algorithm>
#include <cmath>

namespace omd {
namespace {

void CheckSameSize(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw InvalidInput("dimension mismatch: " + std::to_string(a.size()) +
                       " vs " + std::to_string(b.size()));
  }
}

}  // namespace

double Dot(std::span<const double> a, std::span<const double> b) {
  CheckSameSize(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double NormL1(std::span<const double> a) {
  double s = 0.0;
  for (double v : a) s += std::abs(v);
  return s;
}

double NormL2(std::span<const double> a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

double NormInf(std::span<const double> a) {
  double s = 0.0;
  for (double v : a) s = std::max(s, std::abs(v));
  return s;
}

double MaxEntry(std::span<const double> a) {
  return *std::max_element(a.begin(), a.end());
}

double MinEntry(std::span<const double> a) {
  return *std::min_element(a.begin(), a.end());
}

double Sum(std::span<const double> a) {
  double s = 0.0;
  for (double v : a) s += v;
  return s;
}

Vec Subtract(std::span<const double> a, std::span<const double> b) {
  CheckSameSize(a, b);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec Add(std::span<const double> a, std::span<const double> b) {
  CheckSameSize(a, b);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec Scale(std::span<const double> a, double s) {
  Vec out(a.begin(), a.end());
  for (double& v : out) v *= s;
  return out;
}

Vec Axpy(std::span<const double> a, double s, std::span<const double> b) {
  CheckSameSize(a, b);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + s * b[i];
  return out;
}

bool AllFinite(std::span<const double> a) {
  return std::all_of(a.begin(), a.end(),
                     [](double v) { return std::isfinite(v); });
}

Vec Uniform(std::size_t n) {
  return Vec(n, 1.0 / static_cast<double>(n));
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Vec data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw InvalidInput("matrix data has wrong size");
  }
}

Vec Matrix::Apply(std::span<const double> x) const {
  if (x.size() != cols_) throw InvalidInput("matrix-vector size mismatch");
  Vec out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    const double* r = data_.data() + i * cols_;
    for (std::size_t j = 0; j < cols_; ++j) s += r[j] * x[j];
    out[i] = s;
  }
  return out;
}

Vec Matrix::ApplyTransposed(std::span<const double> y) const {
  if (y.size() != rows_) throw InvalidInput("matrix-vector size mismatch");
  Vec out(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const double* r = data_.data() + i * cols_;
    for (std::size_t j = 0; j < cols_; ++j) out[j] += r[j] * y[i];
  }
  return out;
}

void SparseRows::AddRow(std::vector<Entry> entries) {
  for (const Entry& e : entries) {
    if (e.col >= cols_) throw InvalidInput("sparse column out of range");
  }
  rows_.push_back(std::move(entries));
}

Vec SparseRows::Apply(std::span<const double> x) const {
  if (x.size() != cols_) throw InvalidInput("sparse apply size mismatch");
  Vec out(rows_.size(), 0.0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    double s = 0.0;
    for (const Entry& e : rows_[i]) s += e.value * x[e.col];
    out[i] = s;
  }
  return out;
}

Vec SparseRows::ApplyTransposed(std::span<const double> y) const {
  if (y.size() != rows_.size()) {
    throw InvalidInput("sparse transpose size mismatch");
  }
  Vec out(cols_, 0.0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const Entry& e : rows_[i]) out[e.col] += e.value * y[i];
  }
  return out;
}

}  // namespace omd
