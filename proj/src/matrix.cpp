// Copyright 2026 The gwcoarsen Authors
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

#include "gwc/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gwc/error.hpp"
#include "gwc/kernels.hpp"

namespace gwc {

namespace {

void check_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::DimensionMismatch,
          std::string(op) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
              " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    require(r.size() == cols_, ErrorKind::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::column(std::span<const double> v) {
  Matrix m(v.size(), 1);
  std::copy(v.begin(), v.end(), m.data());
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::diag() const {
  const std::size_t n = std::min(rows_, cols_);
  Vector d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = (*this)(i, i);
  return d;
}

double Matrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Vector Matrix::row_sums() const {
  Vector s(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (double v : row(i)) s[i] += v;
  return s;
}

Vector Matrix::col_sums() const {
  Vector s(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const auto r = row(i);
    for (std::size_t j = 0; j < cols_; ++j) s[j] += r[j];
  }
  return s;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), ErrorKind::DimensionMismatch, "matrix product");
  Matrix c(a.rows(), b.cols());
  // i-k-j order: each output row is a sum of scaled rows of b.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ci = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik != 0.0) kernels::axpy(aik, b.row(k), ci);
    }
  }
  return c;
}

Matrix mul_at_b(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), ErrorKind::DimensionMismatch, "matrix product a^T b");
  Matrix c(a.cols(), b.cols());
  for (std::size_t k = 0; k < a.rows(); ++k) {
    const auto bk = b.row(k);
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const double aki = a(k, i);
      if (aki != 0.0) kernels::axpy(aki, bk, c.row(i));
    }
  }
  return c;
}

Matrix mul_a_bt(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), ErrorKind::DimensionMismatch, "matrix product a b^T");
  Matrix c(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) c(i, j) = kernels::dot(a.row(i), b.row(j));
  return c;
}

Vector mul(const Matrix& a, std::span<const double> x) {
  require(a.cols() == x.size(), ErrorKind::DimensionMismatch, "matrix-vector product");
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = kernels::dot(a.row(i), x);
  return y;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_same_shape(a, b, "matrix sum");
  Matrix c = a;
  kernels::axpy(1.0, b.flat(), std::span<double>(c.data(), c.rows() * c.cols()));
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  check_same_shape(a, b, "matrix difference");
  Matrix c = a;
  kernels::axpy(-1.0, b.flat(), std::span<double>(c.data(), c.rows() * c.cols()));
  return c;
}

Matrix operator*(double s, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  kernels::axpy(s, a.flat(), std::span<double>(c.data(), c.rows() * c.cols()));
  return c;
}

Matrix scale_rows_cols(const Matrix& a, std::span<const double> l, std::span<const double> r) {
  require(l.size() == a.rows() && r.size() == a.cols(), ErrorKind::DimensionMismatch,
          "diagonal scaling");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = l[i] * a(i, j) * r[j];
  return c;
}

double frobenius_dot(const Matrix& a, const Matrix& b) {
  check_same_shape(a, b, "frobenius product");
  return kernels::dot(a.flat(), b.flat());
}

double frobenius_norm(const Matrix& a) { return std::sqrt(kernels::sum_sq(a.flat())); }

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (double v : a.flat()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  check_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.flat().size(); ++k)
    m = std::max(m, std::abs(a.flat()[k] - b.flat()[k]));
  return m;
}

double asymmetry(const Matrix& a) {
  require(a.square(), ErrorKind::DimensionMismatch, "asymmetry of non-square matrix");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - a(j, i)));
  return m;
}

}  // namespace gwc
